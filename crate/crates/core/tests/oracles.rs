use dodecic::classifier::TrinomialPair;
use dodecic::exact_arith::rat;
use dodecic::oracles::*;
use dodecic::poly::Poly;
use dodecic::{QPoly, ZPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn pair(a: i64, b: i64) -> TrinomialPair {
    TrinomialPair::from_ints(a, b).unwrap()
}

fn z(coeffs: &[i64]) -> ZPoly {
    Poly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
}

fn q(coeffs: &[i64]) -> QPoly {
    Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
}

#[test]
fn subset_oracle_examples() {
    let mut dodecic = vec![0; 13];
    dodecic[0] = 2;
    dodecic[6] = 1;
    dodecic[12] = 1;
    assert!(irreducible_over_q(&z(&dodecic)).unwrap());
    let mut minus_one = vec![0; 13];
    minus_one[0] = -1;
    minus_one[12] = 1;
    let factor = find_factor(&z(&minus_one)).unwrap().unwrap();
    assert!(factor.degree().unwrap() <= 6);
    assert!(irreducible_over_q(&z(&[9, 0, -2, 0, 1])).unwrap());
}

#[test]
fn pattern_for_12t39() {
    let f = pair(4, 2).dodecic();
    let mut seen = 0;
    for p in [3u64, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if let Some(pattern) = degree_pattern_mod_p(&f, p).unwrap() {
            seen += 1;
            assert_eq!(pattern.total(), 12);
            assert_eq!(72 % pattern.lcm(), 0, "{pattern} at {p}");
        }
    }
    assert!(seen > 5);
}

#[test]
fn order_estimates() {
    let r = frobenius_scan(&pair(1, 2), 20000).unwrap();
    let est = r.order_estimate.unwrap();
    assert!((115.0..=180.0).contains(&est), "{est}");
    assert!(r.interval_contains(144));

    let r = frobenius_scan(&pair(-1, 1), 20000).unwrap();
    assert!(r.interval_contains(12));
    assert!(r.all_consistent(), "{:?}", r.consistency);

    let r = frobenius_scan(&pair(8, 8), 2000).unwrap();
    assert!(r.pattern_histogram.keys().any(|k| !k.is_even()));
}

#[test]
fn report_serialization() {
    let r = frobenius_scan(&pair(0, 3), 500).unwrap();
    let v = serde_json::to_value(&r).unwrap();
    assert_eq!(v["primes_sampled"], 500);
    let hist = v["pattern_histogram"].as_object().unwrap();
    assert_eq!(hist.values().map(|c| c.as_u64().unwrap()).sum::<u64>(), 500);
    let split = hist.get("1,1,1,1,1,1,1,1,1,1,1,1").map_or(0, |c| c.as_u64().unwrap());
    assert_eq!(v["split_fraction"], format!("{}", rat(split as i64) / rat(500)));
}

#[test]
fn frobenius_rejects() {
    assert!(matches!(frobenius_scan(&pair(2, 1), 1000), Err(dodecic::Error::Reducible(_))));
    assert!(matches!(frobenius_scan(&pair(1, 2), 99), Err(dodecic::Error::BudgetTooSmall(99))));
    assert!(degree_pattern_mod_p(&q(&[1, 0, 1]), 15).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn histogram_invariants(a in -30i64..=30, b in (1i64..=30).prop_flat_map(|b| prop_oneof![Just(b), Just(-b)])) {
        let f = pair(a, b).dodecic();
        let stats = scan_polynomial(&f, 300).unwrap();
        prop_assert_eq!(stats.histogram.values().sum::<u64>(), 300);
        prop_assert!(stats.histogram.keys().all(|k| k.total() == 12));
    }

    #[test]
    fn oracle_factors_products(c1 in proptest::collection::vec(-5i64..=5, 1..=3), c2 in proptest::collection::vec(-5i64..=5, 1..=3)) {
        let mut g = c1.clone();
        g.push(1);
        let mut h = c2.clone();
        h.push(1);
        let (g, h) = (z(&g), z(&h));
        let f = &g * &h;
        prop_assert!(!irreducible_over_q(&f).unwrap());
        if let Some(factor) = find_factor(&f).unwrap() {
            let fq = f.map(|c| dodecic::Rational::from_integer(c.clone()));
            let gq = factor.map(|c| dodecic::Rational::from_integer(c.clone()));
            prop_assert!(gq.divides(&fq));
        }
    }
}
