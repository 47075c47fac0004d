//! Verification batteries behind the `verify` and `selftest` commands.

use serde::Serialize;

use crate::classifier::{
    candidate_groups, classify_dodecic, theoretical_order, Classification, GroupLabel, TraceEntry, TrinomialPair,
    EXCLUDED_PAIRS,
};
use crate::error::{Error, Result};
use crate::exact_arith::rat;
use crate::exemplars::EXEMPLARS;
use crate::oracles::{frobenius_scan, SubsetOracle};
use crate::poly::{clear_denominators, discriminant};
use crate::resolvent::{verify_12t12_13_structure, verify_rtilde_split, verify_theta_cube_identity};

pub const DEFAULT_PRIME_BUDGET: usize = 20000;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteCheck {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub classification: Classification,
    pub checks: Vec<SuiteCheck>,
    pub skipped: Vec<String>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, suite: &'static str, name: impl Into<String>, passed: bool, detail: Option<String>) {
        self.checks.push(SuiteCheck { suite, name: name.into(), passed, detail });
    }
}

/// `2^12 3^12 b^5 (a^2 - 4b)^6`.
pub fn closed_form_discriminant(p: &TrinomialPair) -> crate::Rational {
    rat(2).pow(12) * rat(3).pow(12) * p.b().pow(5) * p.quadratic_discriminant().pow(6)
}

/// Runs every applicable check for an irreducible `x^12 + a x^6 + b`.
pub fn verify(p: &TrinomialPair, prime_budget: usize) -> Result<VerifyReport> {
    verify_with(p, prime_budget, &SubsetOracle::default())
}

/// [`verify`] with an explicitly configured irreducibility oracle.
pub fn verify_with(p: &TrinomialPair, prime_budget: usize, oracle: &SubsetOracle) -> Result<VerifyReport> {
    let c = classify_dodecic(p);
    let (Some(g4), Some(g6), Some(g12)) = (c.g4, c.g6, c.g12) else {
        return Err(Error::Reducible(p.dodecic().to_string()));
    };
    let mut report = VerifyReport { classification: c.clone(), checks: Vec::new(), skipped: Vec::new() };

    for (name, poly) in [("quartic", p.quartic()), ("sextic", p.sextic()), ("dodecic", p.dodecic())] {
        let irreducible = oracle.is_irreducible(&clear_denominators(&poly).0)?;
        report.push("irreducibility", format!("{name} irreducible by root search"), irreducible, None);
    }

    let disc = discriminant(&p.dodecic())?;
    report.push("discriminant", "resultant equals closed form", disc == closed_form_discriminant(p), None);

    let candidates = candidate_groups(g4, g6)?;
    report.push("candidates", "pair not excluded", !EXCLUDED_PAIRS.contains(&(g4, g6)), None);
    report.push("candidates", format!("{g12} among candidates"), candidates.contains(&g12), None);

    let bound = (18 * g4.order()).min(4 * g6.order());
    report.push("order", format!("|{g12}| = {} <= {bound}", g12.order()), g12.order() <= bound, None);
    match theoretical_order(p, &c) {
        Some(t) => report.push("order", "field degree formula", t == g12.order(), Some(format!("{t}"))),
        None => report.skipped.push("field degree formula: (G4, G6) outside {4T2, 4T3} x {6T3, 6T9}".into()),
    }

    let scan = frobenius_scan(p, prime_budget)?;
    let (lo, hi) = scan.order_interval;
    let interval = match hi {
        Some(h) => format!("[{lo:.1}, {h:.1}]"),
        None => format!("[{lo:.1}, inf)"),
    };
    for check in &scan.consistency {
        report.push("frobenius", check.name.clone(), check.passed, Some(interval.clone()));
    }

    if (g4, g6) == (GroupLabel::T4_3, GroupLabel::T6_3) {
        match verify_12t12_13_structure(p) {
            Ok(r) => {
                for (name, holds) in &r.cofactor_identities {
                    report.push("resolvent", name.clone(), *holds, None);
                }
            }
            Err(Error::NotApplicable(why)) => report.skipped.push(format!("resolvent structure: {why}")),
            Err(e) => return Err(e),
        }
        match verify_rtilde_split(p) {
            Ok(r) => {
                for (name, holds) in &r.cofactor_identities {
                    report.push("resolvent", name.clone(), *holds, None);
                }
            }
            Err(Error::NotApplicable(why)) => report.skipped.push(format!("R~ split: {why}")),
            Err(e) => return Err(e),
        }
    } else {
        report.skipped.push("resolvent structure: (G4, G6) is not (4T3, 6T3)".into());
    }

    match verify_theta_cube_identity(p) {
        Ok(holds) => report.push("theta_cube", "cube equals b", holds, None),
        Err(Error::NotApplicable(why)) => report.skipped.push(format!("theta cube: {why}")),
        Err(e) => return Err(e),
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SelftestRow {
    pub a: i64,
    pub b: i64,
    pub expected: [GroupLabel; 3],
    pub got: [Option<GroupLabel>; 3],
    pub matched: bool,
    /// The last predicate evaluated, reported on mismatch.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub last_predicate: Option<TraceEntry>,
}

/// Classifies every exemplar and compares with its expected groups.
pub fn selftest() -> Vec<SelftestRow> {
    EXEMPLARS
        .iter()
        .map(|e| {
            let c = classify_dodecic(&e.pair());
            let expected = [e.g4, e.g6, e.g12_label()];
            let got = [c.g4, c.g6, c.g12];
            let matched = got == expected.map(Some);
            SelftestRow {
                a: e.a,
                b: e.b,
                expected,
                got,
                matched,
                last_predicate: if matched { None } else { c.trace.last().cloned() },
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn selftest_passes() {
        let rows = selftest();
        assert_eq!(rows.len(), 17);
        assert!(rows.iter().all(|r| r.matched));
    }

    #[test]
    fn verify_cube_exemplar() {
        let r = verify(&TrinomialPair::from_ints(1, -27).unwrap(), 2000).unwrap();
        assert!(r.all_passed(), "{:?}", r.checks);
        assert!(r.checks.iter().any(|c| c.name == "S1 = S0(q) S0(-q)" && c.passed));
        assert!(matches!(verify(&TrinomialPair::from_ints(2, 1).unwrap(), 200), Err(Error::Reducible(_))));
    }
}
