//! Scalar traits the polynomial layer is generic over.

use std::fmt::Debug;
use std::ops::Neg;

use num_integer::Integer as IntegerOps;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// A commutative ring element usable as a polynomial coefficient.
pub trait Scalar: Clone + PartialEq + Debug + Num + Neg<Output = Self> + FromPrimitive + Send + Sync {}

impl<T> Scalar for T where T: Clone + PartialEq + Debug + Num + Neg<Output = T> + FromPrimitive + Send + Sync {}

/// Scalars whose `Div` is field division (exact for rationals, rounded for floats).
pub trait Field: Scalar {}

impl Field for f32 {}
impl Field for f64 {}
impl Field for Ratio<num_bigint::BigInt> {}
impl Field for Ratio<i64> {}
impl Field for Ratio<i128> {}

/// Integer-like scalars: exact division and gcd, needed by fraction-free algorithms.
pub trait IntegralDomain: Scalar + IntegerOps + Signed {}

impl<T> IntegralDomain for T where T: Scalar + IntegerOps + Signed {}
