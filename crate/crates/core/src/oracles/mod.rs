//! Ground-truth engines that do not share code paths with the classifier:
//! factorization patterns modulo primes and a complex-root irreducibility
//! test over Q.

mod complex_roots;
mod finite_field;
mod frobenius;
mod irreducible;

pub use complex_roots::{aberth, FixedComplex};
pub use finite_field::{degree_pattern_mod_p, DegreePattern, FpPoly};
pub use frobenius::{frobenius_scan, scan_polynomial, wilson_interval, Check, FrobeniusReport, ScanStats};
pub use irreducible::{find_factor, irreducible_over_q, SubsetOracle};
