//! Square classes in the stem field `Q(θ)` of `x^12 + a x^6 + b` and the
//! splitting-field degree they determine.

use super::{Classification, GroupLabel, TrinomialPair};
use crate::error::{Error, Result};
use crate::exact_arith::{rat, rat_is_square, Rational};

/// For `r ∈ Q \ Q²`: `r ∈ Q(θ)²` iff `r(a² - 4b) ∈ Q²`, or `b = s²` and
/// `r(-a ± 2s) ∈ Q²`. When `b ∉ Q²` the last two terms are irrational.
pub fn q_theta_square_test(r: &Rational, p: &TrinomialPair) -> Result<bool> {
    if rat_is_square(r).is_some() {
        return Err(Error::Precondition(format!("{r} is already a rational square")));
    }
    if rat_is_square(&(r * p.quadratic_discriminant())).is_some() {
        return Ok(true);
    }
    let Some(s) = rat_is_square(p.b()) else {
        return Ok(false);
    };
    let two_s = rat(2) * s;
    let minus_a = -p.a().clone();
    Ok(rat_is_square(&(r * (&minus_a + &two_s))).is_some() || rat_is_square(&(r * (minus_a - two_s))).is_some())
}

/// Membership in `Q(θ)²` for any rational.
pub fn in_stem_field_squares(r: &Rational, p: &TrinomialPair) -> bool {
    rat_is_square(r).is_some() || q_theta_square_test(r, p).unwrap_or(false)
}

/// `12 [K':K] [L:K']` with `K = Q(θ)`, `K' = K(√-3, √b)`, `L = K'(∛b)`.
/// Defined for `(G4, G6) ∈ {4T2, 4T3} × {6T3, 6T9}`.
pub fn theoretical_order(p: &TrinomialPair, c: &Classification) -> Option<u64> {
    if !c.f_irreducible {
        return None;
    }
    let (g4, g6) = (c.g4?, c.g6?);
    if !matches!(g4, GroupLabel::T4_2 | GroupLabel::T4_3) || !matches!(g6, GroupLabel::T6_3 | GroupLabel::T6_9) {
        return None;
    }
    let minus_three = in_stem_field_squares(&rat(-3), p);
    let b = in_stem_field_squares(p.b(), p);
    let minus_three_b = in_stem_field_squares(&(rat(-3) * p.b()), p);
    let biquadratic = match (minus_three, b, minus_three_b) {
        (true, true, _) => 1,
        (false, false, false) => 4,
        _ => 2,
    };
    let cubic = if g6 == GroupLabel::T6_3 { 1 } else { 3 };
    Some(12 * biquadratic * cubic)
}

#[cfg(test)]
mod tests {
    use super::super::classify_dodecic;
    use super::*;

    fn pair(a: i64, b: i64) -> TrinomialPair {
        TrinomialPair::from_ints(a, b).unwrap()
    }

    #[test]
    fn square_class_examples() {
        assert!(q_theta_square_test(&rat(-3), &pair(9, 27)).unwrap());
        assert!(!q_theta_square_test(&rat(-6), &pair(0, 2)).unwrap());
        assert!(!q_theta_square_test(&rat(3), &pair(-1, 4)).unwrap());
        assert!(q_theta_square_test(&rat(-3), &pair(-1, 4)).unwrap());
        assert!(q_theta_square_test(&rat(4), &pair(1, 2)).is_err());
    }

    #[test]
    fn orders_from_the_degree_formula() {
        for ((a, b), order) in [((1, 2), 144), ((0, 2), 48), ((3, 1), 24)] {
            let p = pair(a, b);
            let c = classify_dodecic(&p);
            assert_eq!(theoretical_order(&p, &c), Some(order), "{p}");
        }
        let p = pair(8, 8);
        assert_eq!(theoretical_order(&p, &classify_dodecic(&p)), None);
    }
}
