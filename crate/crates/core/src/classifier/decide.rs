use std::collections::HashMap;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::irreducible::{is_irreducible_quartic, is_irreducible_sextic};
use super::{GroupLabel, TrinomialPair};
use crate::error::{Error, Result};
use crate::exact_arith::{format_rational, rat, rat_is_cube, rat_is_square, Rational};
use crate::poly::rational_roots;

/// One evaluated predicate of the decision tree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    pub test: String,
    pub value: String,
    pub result: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub input: TrinomialPair,
    pub f_irreducible: bool,
    pub g4: Option<GroupLabel>,
    pub g6: Option<GroupLabel>,
    pub g12: Option<GroupLabel>,
    /// Predicates in evaluation order. For reducible `f` this records the
    /// failing irreducibility checks instead.
    pub trace: Vec<TraceEntry>,
}

impl Classification {
    /// The trace entry for `test`, if that predicate was evaluated.
    pub fn predicate(&self, test: &str) -> Option<&TraceEntry> {
        self.trace.iter().find(|t| t.test == test)
    }
}

impl Serialize for Classification {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Classification", 9)?;
        st.serialize_field("a", &format_rational(self.input.a()))?;
        st.serialize_field("b", &format_rational(self.input.b()))?;
        st.serialize_field("irreducible", &self.f_irreducible)?;
        st.serialize_field("g4", &self.g4)?;
        st.serialize_field("g6", &self.g6)?;
        st.serialize_field("g12", &self.g12)?;
        st.serialize_field("order", &self.g12.map(|g| g.order()))?;
        st.serialize_field("order_provenance", &self.g12.map(|g| g.order_provenance()))?;
        st.serialize_field("trace", &self.trace)?;
        st.end()
    }
}

/// Galois group of an irreducible `x^4 + a x^2 + b`.
pub fn classify_quartic(p: &TrinomialPair) -> Result<GroupLabel> {
    if !is_irreducible_quartic(p) {
        return Err(Error::Reducible(p.quartic().to_string()));
    }
    Ok(if rat_is_square(&(p.b() * p.quadratic_discriminant())).is_some() {
        GroupLabel::T4_1
    } else if rat_is_square(p.b()).is_some() {
        GroupLabel::T4_2
    } else {
        GroupLabel::T4_3
    })
}

/// Galois group of an irreducible `x^6 + a x^3 + b`, with `d = 3(4b - a²)`
/// and `r(x) = x³ - 3bx + ab`.
pub fn classify_sextic(p: &TrinomialPair) -> Result<GroupLabel> {
    if !is_irreducible_sextic(p) {
        return Err(Error::Reducible(p.sextic().to_string()));
    }
    let d_square = rat_is_square(&p.sextic_d()).is_some();
    let b_cube = rat_is_cube(p.b()).is_some();
    let r_reducible = !rational_roots(&p.cubic_resolvent()).is_empty();
    Ok(match (d_square, b_cube, r_reducible) {
        (true, _, true) => GroupLabel::T6_2,
        (true, true, false) => GroupLabel::T6_1,
        (true, false, false) => GroupLabel::T6_5,
        (false, true, _) | (false, _, true) => GroupLabel::T6_3,
        (false, false, false) => GroupLabel::T6_9,
    })
}

pub mod predicate {
    pub const B_DISC: &str = "b(a^2-4b) in Q^2";
    pub const B_SQUARE: &str = "b in Q^2";
    pub const B_CUBE: &str = "b in Q^3";
    pub const R_REDUCIBLE: &str = "r(x) reducible";
    pub const D_SQUARE: &str = "3(4b-a^2) in Q^2";
    pub const PLUS: &str = "3(a+2sqrt(b)) in Q^2";
    pub const MINUS: &str = "3(a-2sqrt(b)) in Q^2";
    pub const MINUS_3B: &str = "-3b in Q^2";
    pub const B_D: &str = "3b(4b-a^2) in Q^2";
}
use predicate::*;

/// Evaluates each named predicate once and records it in order.
struct Tracer<'a> {
    p: &'a TrinomialPair,
    trace: Vec<TraceEntry>,
    seen: HashMap<&'static str, bool>,
}

impl<'a> Tracer<'a> {
    fn record(&mut self, test: &'static str, value: String, result: bool) -> bool {
        self.seen.insert(test, result);
        self.trace.push(TraceEntry { test: test.to_string(), value, result });
        result
    }

    fn square(&mut self, test: &'static str, value: impl FnOnce(&TrinomialPair) -> Rational) -> bool {
        if let Some(&r) = self.seen.get(test) {
            return r;
        }
        let v = value(self.p);
        let result = rat_is_square(&v).is_some();
        self.record(test, format_rational(&v), result)
    }

    fn b_cube(&mut self) -> bool {
        if let Some(&r) = self.seen.get(B_CUBE) {
            return r;
        }
        let result = rat_is_cube(self.p.b()).is_some();
        self.record(B_CUBE, format_rational(self.p.b()), result)
    }

    fn r_reducible(&mut self) -> bool {
        if let Some(&r) = self.seen.get(R_REDUCIBLE) {
            return r;
        }
        let r = self.p.cubic_resolvent();
        let result = !rational_roots(&r).is_empty();
        self.record(R_REDUCIBLE, r.to_string(), result)
    }

    fn sqrt_b(&self) -> Rational {
        rat_is_square(self.p.b()).expect("only called on the b in Q^2 branch")
    }
}

fn decide(t: &mut Tracer<'_>) -> u16 {
    let b_disc = |p: &TrinomialPair| p.b() * p.quadratic_discriminant();
    let d = |p: &TrinomialPair| p.sextic_d();
    let b_d = |p: &TrinomialPair| p.b() * p.sextic_d();
    if t.square(B_DISC, b_disc) {
        return if t.b_cube() || t.r_reducible() { 11 } else { 39 };
    }
    if t.square(B_SQUARE, |p| p.b().clone()) {
        let s = t.sqrt_b();
        if t.square(D_SQUARE, d) {
            return if t.r_reducible() {
                3
            } else if t.b_cube() {
                2
            } else {
                18
            };
        }
        let plus = |p: &TrinomialPair| rat(3) * (p.a() + rat(2) * &s);
        let minus = |p: &TrinomialPair| rat(3) * (p.a() - rat(2) * &s);
        if t.square(PLUS, plus) || t.square(MINUS, minus) {
            return if t.b_cube() || t.r_reducible() { 3 } else { 16 };
        }
        return if t.b_cube() || t.r_reducible() { 10 } else { 37 };
    }
    if t.square(D_SQUARE, d) {
        return if t.r_reducible() {
            15
        } else if t.b_cube() {
            14
        } else {
            42
        };
    }
    let minus_3b = |p: &TrinomialPair| rat(-3) * p.b();
    if t.square(MINUS_3B, minus_3b) || t.square(B_D, b_d) {
        if t.b_cube() {
            return if t.square(MINUS_3B, minus_3b) { 12 } else { 13 };
        }
        if t.r_reducible() {
            return if t.square(B_D, b_d) { 12 } else { 13 };
        }
        return 38;
    }
    if t.b_cube() || t.r_reducible() {
        28
    } else {
        81
    }
}

/// Full classification: irreducibility of the three trinomials, `G4`, `G6`,
/// and for irreducible `f` the dodecic group with its decision trace.
pub fn classify_dodecic(p: &TrinomialPair) -> Classification {
    let g4 = classify_quartic(p).ok();
    let g6 = classify_sextic(p).ok();
    let f_irreducible = g4.is_some() && g6.is_some();
    let mut tracer = Tracer { p, trace: Vec::new(), seen: HashMap::new() };
    let g12 = if f_irreducible {
        Some(GroupLabel::t12(decide(&mut tracer)))
    } else {
        tracer.record("x^4+ax^2+b irreducible", p.quartic().to_string(), g4.is_some());
        if g4.is_some() {
            tracer.record("x^6+ax^3+b irreducible", p.sextic().to_string(), false);
        }
        None
    };
    Classification { input: p.clone(), f_irreducible, g4, g6, g12, trace: tracer.trace }
}
