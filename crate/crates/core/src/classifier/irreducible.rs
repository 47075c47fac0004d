//! Closed-form irreducibility criteria for `g(x^k)` with `g = x^2 + a x + b`
//! and `k = 2, 3, 6`, obtained from Capelli's theorem applied to `x^k - α`
//! over the quadratic field `Q(α)`.

use super::TrinomialPair;
use crate::exact_arith::{rat, rat_is_cube, rat_is_square};
use crate::poly::rational_roots;
use crate::QPoly;

/// `x^4 + a x^2 + b` is reducible iff `a^2 - 4b ∈ Q²`, or `b = s²` with
/// `-a + 2s ∈ Q²` or `-a - 2s ∈ Q²`.
pub fn is_irreducible_quartic(p: &TrinomialPair) -> bool {
    if rat_is_square(&p.quadratic_discriminant()).is_some() {
        return false;
    }
    match rat_is_square(p.b()) {
        Some(s) => {
            let two_s = rat(2) * s;
            let minus_a = -p.a().clone();
            rat_is_square(&(&minus_a + &two_s)).is_none() && rat_is_square(&(minus_a - two_s)).is_none()
        }
        None => true,
    }
}

/// `x^6 + a x^3 + b` is reducible iff `a^2 - 4b ∈ Q²`, or `b = m³` and
/// `s³ - 3ms + a` has a rational root.
pub fn is_irreducible_sextic(p: &TrinomialPair) -> bool {
    if rat_is_square(&p.quadratic_discriminant()).is_some() {
        return false;
    }
    match rat_is_cube(p.b()) {
        Some(m) => {
            let trace_cubic = QPoly::from_terms([(rat(1), 3), (rat(-3) * m, 1), (p.a().clone(), 0)]);
            rational_roots(&trace_cubic).is_empty()
        }
        None => true,
    }
}

/// `x^12 + a x^6 + b` is irreducible iff both the quartic and sextic are;
/// `x^6 - α` has no clause for fourth powers because `4 ∤ 6`.
pub fn is_irreducible_dodecic(p: &TrinomialPair) -> bool {
    is_irreducible_quartic(p) && is_irreducible_sextic(p)
}
