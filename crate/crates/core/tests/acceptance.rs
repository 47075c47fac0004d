//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails.

use std::time::{Duration, Instant};

use dodecic::classifier::*;
use dodecic::exact_arith::{rat, rat_is_square, Rational};
use dodecic::exemplars::EXEMPLARS;
use dodecic::oracles::{frobenius_scan, scan_polynomial, SubsetOracle};
use dodecic::poly::{clear_denominators, discriminant, rational_roots};
use dodecic::resolvent::verify_12t12_13_structure;
use dodecic::resolvent::verify_theta_cube_identity;
use dodecic::suite::closed_form_discriminant;
use dodecic::QPoly;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome { passed, detail: detail.into() }
}

fn grid() -> Vec<(TrinomialPair, Classification)> {
    let mut points = Vec::new();
    for a in -15..=15 {
        for b in (-15..=15).filter(|&b| b != 0) {
            let p = TrinomialPair::from_ints(a, b).unwrap();
            let c = classify_dodecic(&p);
            points.push((p, c));
        }
    }
    points
}

fn exemplar_rows() -> Outcome {
    let start = Instant::now();
    let mismatches: Vec<String> = EXEMPLARS
        .iter()
        .filter_map(|e| {
            let c = classify_dodecic(&e.pair());
            let ok = (c.g4, c.g6, c.g12) == (Some(e.g4), Some(e.g6), Some(e.g12_label()));
            (!ok).then(|| format!("({}, {})", e.a, e.b))
        })
        .collect();
    let elapsed = start.elapsed();
    outcome(
        mismatches.is_empty() && elapsed < Duration::from_secs(1),
        format!("{}/17 rows in {elapsed:.2?} {mismatches:?}", 17 - mismatches.len()),
    )
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.gen_range(-10_000..=10_000);
    let d: i64 = rng.gen_range(1..=10_000);
    Rational::new(n.into(), d.into())
}

fn discriminant_identity() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut checked = 0;
    let mut failures = Vec::new();
    while checked < 100 {
        let (a, b) = (random_rational(&mut rng), random_rational(&mut rng));
        let p = match TrinomialPair::new(a, b) {
            Ok(p) if p.quadratic_discriminant() != rat(0) => p,
            _ => continue,
        };
        checked += 1;
        if discriminant(&p.dodecic()).unwrap() != closed_form_discriminant(&p) {
            failures.push(p.to_string());
        }
    }
    outcome(failures.is_empty(), format!("{}/100 random pairs {failures:?}", 100 - failures.len()))
}

fn integral(f: &QPoly) -> dodecic::ZPoly {
    clear_denominators(f).0
}

fn irreducibility(points: &[(TrinomialPair, Classification)]) -> Outcome {
    let start = Instant::now();
    let oracle = SubsetOracle::default();
    let pure = SubsetOracle { sieve_primes: 0, ..SubsetOracle::default() };
    let mut disagreements = Vec::new();
    let mut capelli = 0;
    for (p, c) in points {
        let q = is_irreducible_quartic(p);
        let s = is_irreducible_sextic(p);
        let f = is_irreducible_dodecic(p);
        if f != c.f_irreducible || f != (q && s) {
            capelli += 1;
        }
        for (name, claim, poly) in [("quartic", q, p.quartic()), ("sextic", s, p.sextic()), ("dodecic", f, p.dodecic())]
        {
            let z = integral(&poly);
            let fast = oracle.is_irreducible(&z).unwrap();
            let slow = pure.is_irreducible(&z).unwrap();
            if claim != fast || claim != slow {
                disagreements.push(format!("{name} {p}"));
            }
        }
    }
    outcome(
        disagreements.is_empty() && capelli == 0,
        format!(
            "{} points x 3 families, {} disagreements, {capelli} conjunction failures, {:.1?} {disagreements:?}",
            points.len(),
            disagreements.len(),
            start.elapsed()
        ),
    )
}

fn candidates(points: &[(TrinomialPair, Classification)]) -> Outcome {
    let mut bad = Vec::new();
    let mut irreducible = 0;
    for (p, c) in points.iter().filter(|(_, c)| c.f_irreducible) {
        irreducible += 1;
        let (g4, g6, g12) = (c.g4.unwrap(), c.g6.unwrap(), c.g12.unwrap());
        if EXCLUDED_PAIRS.contains(&(g4, g6)) || !candidate_groups(g4, g6).unwrap().contains(&g12) {
            bad.push(p.to_string());
        }
    }
    outcome(bad.is_empty(), format!("{irreducible} irreducible points {bad:?}"))
}

fn order_estimation() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for g12 in [3u16, 10, 16, 37, 12, 13, 28, 38, 81] {
        let e = EXEMPLARS.iter().find(|e| e.g12 == g12).unwrap();
        let label = e.g12_label();
        let start = Instant::now();
        let r = frobenius_scan(&e.pair(), 20000).unwrap();
        let elapsed = start.elapsed();
        let hit = r.interval_contains(label.order()) && elapsed < Duration::from_secs(60);
        ok &= hit && label.order_provenance() == OrderProvenance::PaperTable3;
        lines.push(format!(
            "{label}:{} in [{:.1},{:.1}]{}",
            label.order(),
            r.order_interval.0,
            r.order_interval.1.unwrap_or(f64::INFINITY),
            if hit { "" } else { "!" }
        ));
    }
    outcome(ok, lines.join(" "))
}

fn theoretical(points: &[(TrinomialPair, Classification)]) -> Outcome {
    let mut count = 0;
    let mut bad = Vec::new();
    for (p, c) in points.iter().filter(|(_, c)| c.f_irreducible) {
        let (g4, g6) = (c.g4.unwrap(), c.g6.unwrap());
        if !matches!(g4, GroupLabel::T4_2 | GroupLabel::T4_3) || !matches!(g6, GroupLabel::T6_3 | GroupLabel::T6_9) {
            continue;
        }
        count += 1;
        let g12 = c.g12.unwrap();
        if g12.order_provenance() != OrderProvenance::PaperTable3 || theoretical_order(p, c) != Some(g12.order()) {
            bad.push(p.to_string());
        }
    }
    outcome(bad.is_empty() && count > 0, format!("{count} points {bad:?}"))
}

fn resolvent_structure(points: &[(TrinomialPair, Classification)]) -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    let (mut rooted, mut split) = (0, 0);
    let mut bad = Vec::new();
    // off-grid exemplars reach the b in Q^3 branches
    let extra: Vec<(TrinomialPair, Classification)> = [(1, -27), (0, -3)]
        .iter()
        .map(|&(a, b)| {
            let p = TrinomialPair::from_ints(a, b).unwrap();
            let c = classify_dodecic(&p);
            (p, c)
        })
        .collect();
    for (p, c) in points.iter().chain(&extra) {
        if !matches!(c.g12, Some(g) if g == GroupLabel::t12(12) || g == GroupLabel::t12(13)) {
            continue;
        }
        count += 1;
        let report = verify_12t12_13_structure(p).unwrap();
        let mut ok = report.all_hold();
        for name in ["x^6 divides R", "f(x) divides R", "R1(x^6) divides R"] {
            ok &= report.holds(name) == Some(true);
        }
        let roots = rational_roots(&p.cubic_resolvent());
        for r in &roots {
            ok &= report.holds(&format!("S(x^2) divides cofactor, r = {r}")) == Some(true);
        }
        rooted += usize::from(!roots.is_empty());
        let minus_3b = rat_is_square(&(rat(-3) * p.b())).is_some();
        if dodecic::exact_arith::rat_is_cube(p.b()).is_some() && minus_3b {
            split += 1;
            ok &= report.holds("S1 = S0(q) S0(-q)") == Some(true);
        }
        if !ok {
            bad.push(p.to_string());
        }
    }
    outcome(
        bad.is_empty() && count > 0,
        format!(
            "{count} points including 2 off-grid ({rooted} with rational r, {split} with S0 split) in {:.1?} {bad:?}",
            start.elapsed()
        ),
    )
}

fn theta_cube(points: &[(TrinomialPair, Classification)]) -> Outcome {
    let mut count = 0;
    let mut bad = Vec::new();
    for (p, _) in points.iter().filter(|(_, c)| c.f_irreducible) {
        let applicable = rational_roots(&p.cubic_resolvent()).iter().any(|r| r * r != *p.b());
        if !applicable {
            continue;
        }
        count += 1;
        if verify_theta_cube_identity(p) != Ok(true) {
            bad.push(p.to_string());
        }
    }
    outcome(bad.is_empty() && count > 0, format!("{count} points {bad:?}"))
}

fn parity(points: &[(TrinomialPair, Classification)]) -> Outcome {
    let mut mismatches = Vec::new();
    let mut odd_seen = Vec::new();
    let mut scanned = 0;
    for (p, c) in points.iter().filter(|(_, c)| c.f_irreducible) {
        let square = rat_is_square(&discriminant(&p.dodecic()).unwrap()).is_some();
        if square != (c.g4 == Some(GroupLabel::T4_2)) {
            mismatches.push(p.to_string());
        }
        if square {
            scanned += 1;
            let stats = scan_polynomial(&p.dodecic(), 2000).unwrap();
            if stats.histogram.keys().any(|k| !k.is_even()) {
                odd_seen.push(p.to_string());
            }
        }
    }
    outcome(
        mismatches.is_empty() && odd_seen.is_empty() && scanned > 0,
        format!("{scanned} square-discriminant polynomials scanned over 2000 primes {mismatches:?} {odd_seen:?}"),
    )
}

fn order_bound(points: &[(TrinomialPair, Classification)]) -> Outcome {
    let mut count = 0;
    let mut bad = Vec::new();
    for (p, c) in points.iter().filter(|(_, c)| c.f_irreducible) {
        count += 1;
        let (g4, g6, g12) = (c.g4.unwrap(), c.g6.unwrap(), c.g12.unwrap());
        if g12.order() > (18 * g4.order()).min(4 * g6.order()) {
            bad.push(p.to_string());
        }
    }
    outcome(bad.is_empty(), format!("{count} points {bad:?}"))
}

fn main() {
    let points = grid();
    let criteria: Vec<Criterion> = vec![
        ("exemplar conformance", Box::new(exemplar_rows)),
        ("discriminant identity", Box::new(discriminant_identity)),
        ("irreducibility criteria vs subset oracle", Box::new(|| irreducibility(&points))),
        ("candidate groups and excluded pairs", Box::new(|| candidates(&points))),
        ("order estimation", Box::new(order_estimation)),
        ("theoretical order", Box::new(|| theoretical(&points))),
        ("resolvent structure", Box::new(|| resolvent_structure(&points))),
        ("theta cube identity", Box::new(|| theta_cube(&points))),
        ("parity law", Box::new(|| parity(&points))),
        ("order bound", Box::new(|| order_bound(&points))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        failed += usize::from(!o.passed);
        println!("criterion {:>2} {} {name}: {}", i + 1, if o.passed { "PASS" } else { "FAIL" }, o.detail);
    }
    println!("{}/{} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
