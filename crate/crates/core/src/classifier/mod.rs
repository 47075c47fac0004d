//! Decision procedures for the Galois groups of `x^4 + a x^2 + b`,
//! `x^6 + a x^3 + b` and `x^12 + a x^6 + b`.

mod decide;
mod groups;
mod irreducible;
mod stem_field;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact_arith::{format_rational, parse_rational, rat, Rational};
use crate::QPoly;

pub use decide::{classify_dodecic, classify_quartic, classify_sextic, predicate, Classification, TraceEntry};
pub use groups::{candidate_groups, GroupLabel, OrderProvenance, EXCLUDED_PAIRS};
pub use irreducible::{is_irreducible_dodecic, is_irreducible_quartic, is_irreducible_sextic};
pub use stem_field::{in_stem_field_squares, q_theta_square_test, theoretical_order};

/// The coefficients `(a, b)` shared by the three trinomials. `b` is never zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TrinomialPair {
    a: Rational,
    b: Rational,
}

impl TrinomialPair {
    pub fn new(a: Rational, b: Rational) -> Result<Self> {
        if num_traits::Zero::is_zero(&b) {
            return Err(Error::ZeroConstant);
        }
        Ok(TrinomialPair { a, b })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(rat(a), rat(b))
    }

    pub fn parse(a: &str, b: &str) -> Result<Self> {
        Self::new(parse_rational(a)?, parse_rational(b)?)
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    fn trinomial(&self, k: usize) -> QPoly {
        QPoly::from_terms([(rat(1), 2 * k), (self.a.clone(), k), (self.b.clone(), 0)])
    }

    /// `x^2 + a x + b`
    pub fn quadratic(&self) -> QPoly {
        self.trinomial(1)
    }

    /// `x^4 + a x^2 + b`
    pub fn quartic(&self) -> QPoly {
        self.trinomial(2)
    }

    /// `x^6 + a x^3 + b`
    pub fn sextic(&self) -> QPoly {
        self.trinomial(3)
    }

    /// `x^12 + a x^6 + b`
    pub fn dodecic(&self) -> QPoly {
        self.trinomial(6)
    }

    /// `r(x) = x^3 - 3b x + ab`
    pub fn cubic_resolvent(&self) -> QPoly {
        QPoly::from_terms([(rat(1), 3), (rat(-3) * &self.b, 1), (&self.a * &self.b, 0)])
    }

    /// `a^2 - 4b`
    pub fn quadratic_discriminant(&self) -> Rational {
        &self.a * &self.a - rat(4) * &self.b
    }

    /// `d = 3(4b - a^2)`
    pub fn sextic_d(&self) -> Rational {
        rat(-3) * self.quadratic_discriminant()
    }
}

impl Serialize for TrinomialPair {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("TrinomialPair", 2)?;
        st.serialize_field("a", &format_rational(&self.a))?;
        st.serialize_field("b", &format_rational(&self.b))?;
        st.end()
    }
}

impl std::fmt::Display for TrinomialPair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(a, b) = ({}, {})", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction() {
        assert_eq!(TrinomialPair::from_ints(1, 0), Err(Error::ZeroConstant));
        let p = TrinomialPair::parse("-1/2", "3").unwrap();
        assert_eq!(p.dodecic().to_string(), "x^12 - 1/2x^6 + 3");
        assert_eq!(p.cubic_resolvent().to_string(), "x^3 - 9x - 3/2");
        assert_eq!(p.dodecic(), p.quartic().compose_power(3));
        assert_eq!(p.dodecic(), p.sextic().compose_power(2));
        assert_eq!(p.dodecic(), p.quadratic().compose_power(6));
        assert!(TrinomialPair::parse("x", "1").is_err());
    }
}
