//! Chebotarev sampling: the density of split primes is `1/|G|`, and each
//! unramified pattern is the cycle type of a Frobenius element.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::finite_field::{DegreePattern, FpPoly};
use crate::classifier::{classify_dodecic, TrinomialPair};
use crate::error::{Error, Result};
use crate::exact_arith::{format_rational, rat_is_square, Rational};
use crate::poly::discriminant;
use crate::QPoly;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

/// Pattern counts over the first `primes_sampled` unramified odd primes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanStats {
    pub primes_sampled: usize,
    pub ramified_skipped: usize,
    pub largest_prime: u64,
    pub histogram: BTreeMap<DegreePattern, u64>,
}

impl ScanStats {
    pub fn split_count(&self) -> u64 {
        self.histogram.iter().filter(|(k, _)| k.is_split()).map(|(_, v)| *v).sum()
    }
}

fn pattern_at(f: &QPoly, p: u64) -> Option<DegreePattern> {
    let r = FpPoly::from_rational(f, p)?;
    (r.degree() == f.degree() && r.is_squarefree()).then(|| r.distinct_degree_pattern())
}

/// Degree patterns of `f` at the first `budget` odd primes where it stays
/// squarefree of full degree. Primes are processed in parallel and merged in
/// increasing order, so the result is deterministic.
pub fn scan_polynomial(f: &QPoly, budget: usize) -> Result<ScanStats> {
    if f.degree().unwrap_or(0) < 1 {
        return Err(Error::DegreeTooSmall { op: "scan", found: 0, min: 1 });
    }
    let mut stats = ScanStats { primes_sampled: 0, ramified_skipped: 0, largest_prime: 0, histogram: BTreeMap::new() };
    let mut primes = primal::Primes::all().skip(1).map(|p| p as u64);
    while stats.primes_sampled < budget {
        let need = budget - stats.primes_sampled;
        let chunk: Vec<u64> = primes.by_ref().take(need + need / 8 + 16).collect();
        let results: Vec<(u64, Option<DegreePattern>)> = chunk.par_iter().map(|&p| (p, pattern_at(f, p))).collect();
        for (p, pattern) in results {
            if stats.primes_sampled == budget {
                break;
            }
            match pattern {
                Some(pat) => {
                    *stats.histogram.entry(pat).or_insert(0) += 1;
                    stats.primes_sampled += 1;
                    stats.largest_prime = p;
                }
                None => stats.ramified_skipped += 1,
            }
        }
    }
    Ok(stats)
}

/// Wilson score interval for a binomial proportion.
pub fn wilson_interval(successes: u64, trials: u64, z: f64) -> (f64, f64) {
    let n = trials as f64;
    let phat = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (phat + z2 / (2.0 * n)) / denom;
    let half = z / denom * (phat * (1.0 - phat) / n + z2 / (4.0 * n * n)).sqrt();
    ((center - half).max(0.0), (center + half).min(1.0))
}

const Z_95: f64 = 1.959963984540054;

#[derive(Clone, Debug, Serialize)]
pub struct FrobeniusReport {
    pub input: TrinomialPair,
    pub primes_sampled: usize,
    pub ramified_skipped: usize,
    pub largest_prime: u64,
    pub pattern_histogram: BTreeMap<DegreePattern, u64>,
    pub split_count: u64,
    #[serde(serialize_with = "as_rational_string")]
    pub split_fraction: Rational,
    /// `primes_sampled / split_count`; absent when nothing split.
    pub order_estimate: Option<f64>,
    /// 95% interval for `|G|`; the upper end is absent when nothing split.
    pub order_interval: (f64, Option<f64>),
    /// The order of the group the classifier assigned.
    pub claimed_order: Option<u64>,
    pub consistency: Vec<Check>,
}

fn as_rational_string<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

impl FrobeniusReport {
    pub fn interval_contains(&self, order: u64) -> bool {
        let (lo, hi) = self.order_interval;
        order as f64 >= lo && hi.is_none_or(|h| order as f64 <= h)
    }

    pub fn all_consistent(&self) -> bool {
        self.consistency.iter().all(|c| c.passed)
    }
}

/// Samples `budget` unramified primes for an irreducible `x^12 + a x^6 + b`
/// and checks the statistics against the classification.
pub fn frobenius_scan(p: &TrinomialPair, budget: usize) -> Result<FrobeniusReport> {
    if budget < 100 {
        return Err(Error::BudgetTooSmall(budget));
    }
    let class = classify_dodecic(p);
    let (Some(g12), Some(g4), Some(g6)) = (class.g12, class.g4, class.g6) else {
        return Err(Error::Reducible(p.dodecic().to_string()));
    };
    let f = p.dodecic();
    let stats = scan_polynomial(&f, budget)?;
    let split = stats.split_count();
    let n = stats.primes_sampled as u64;
    let (lo, hi) = wilson_interval(split, n, Z_95);
    let order_interval = (1.0 / hi, (lo > 0.0).then(|| 1.0 / lo));
    let order_estimate = (split > 0).then(|| n as f64 / split as f64);
    let claimed = g12.order();

    let mut consistency = Vec::new();
    let disc_square = rat_is_square(&discriminant(&f)?).is_some();
    if disc_square {
        consistency
            .push(Check { name: "even_patterns_only".into(), passed: stats.histogram.keys().all(|k| k.is_even()) });
    } else {
        consistency
            .push(Check { name: "odd_pattern_observed".into(), passed: stats.histogram.keys().any(|k| !k.is_even()) });
    }
    consistency.push(Check {
        name: "pattern_lcm_divides_order".into(),
        passed: stats.histogram.keys().all(|k| claimed % k.lcm() == 0),
    });
    let bound = (18 * g4.order()).min(4 * g6.order());
    consistency.push(Check { name: "order_bound".into(), passed: order_interval.0 <= bound as f64 });
    let report = FrobeniusReport {
        input: p.clone(),
        primes_sampled: stats.primes_sampled,
        ramified_skipped: stats.ramified_skipped,
        largest_prime: stats.largest_prime,
        split_count: split,
        split_fraction: Rational::new(split.into(), n.into()),
        order_estimate,
        order_interval,
        claimed_order: Some(claimed),
        consistency,
        pattern_histogram: stats.histogram,
    };
    let contains = report.interval_contains(claimed);
    let mut report = report;
    report.consistency.push(Check { name: "interval_contains_claimed_order".into(), passed: contains });
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn wilson_bounds() {
        let (lo, hi) = wilson_interval(50, 1000, Z_95);
        assert!(lo < 0.05 && hi > 0.05);
        assert!((lo - 0.038130262).abs() < 1e-8 && (hi - 0.065313820).abs() < 1e-8);
        assert!(wilson_interval(0, 100, Z_95).0 < 1e-12);
    }

    #[test]
    fn small_scan_bookkeeping() {
        let p = TrinomialPair::from_ints(8, 8).unwrap();
        let r = frobenius_scan(&p, 400).unwrap();
        assert_eq!(r.primes_sampled, 400);
        assert_eq!(r.pattern_histogram.values().sum::<u64>(), 400);
        assert!(r.pattern_histogram.keys().all(|k| k.total() == 12));
        // b = 8 is not a square, so the discriminant is not either
        assert!(r.consistency.iter().any(|c| c.name == "odd_pattern_observed" && c.passed));
        assert!(frobenius_scan(&p, 50).is_err());
        assert!(frobenius_scan(&TrinomialPair::from_ints(2, 1).unwrap(), 200).is_err());
    }
}
