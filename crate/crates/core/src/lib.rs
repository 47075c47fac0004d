//! Exact Galois group classification for the dodecic trinomials
//! `x^12 + a x^6 + b` over the rationals.
//!
//! The crate is organised bottom-up:
//!
//! * [`exact_arith`] - big integers, rationals and the perfect-power
//!   predicates used by every decision branch.
//! * [`poly`] - dense univariate polynomials generic over the scalar type,
//!   with resultants, discriminants, rational roots, exact square roots and
//!   quotient-ring arithmetic.
//! * [`classifier`] - irreducibility criteria and the decision trees that
//!   determine the groups of the quartic, sextic and dodecic trinomials.
//! * [`resolvent`] - linear resolvents built from resultants and the
//!   certification of the polynomial identities separating 12T12 from 12T13.
//! * [`oracles`] - independent checks: Frobenius degree patterns modulo
//!   primes and a complex-root irreducibility test.
//! * [`suite`] - the per-polynomial verification battery used by the CLI.

pub mod classifier;
pub mod error;
pub mod exact_arith;
pub mod exemplars;
pub mod oracles;
pub mod poly;
pub mod resolvent;
pub mod scalar;
pub mod suite;

pub use classifier::{classify_dodecic, Classification, GroupLabel, TrinomialPair};
pub use error::{Error, Result};
pub use exact_arith::{Integer, Rational};
pub use poly::Poly;

/// Polynomials with rational coefficients.
pub type QPoly = Poly<Rational>;
/// Polynomials with integer coefficients.
pub type ZPoly = Poly<Integer>;
/// Polynomials with double precision coefficients.
pub type F64Poly = Poly<f64>;
