//! Arbitrary-precision integers and rationals, plus the perfect-power tests
//! (`r ∈ Q²`, `r ∈ Q³`) consumed by the classifier.

use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

pub type Integer = BigInt;
/// Always stored in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(n: i64) -> Integer {
    Integer::from(n)
}

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

/// Exact `k`-th root of a nonnegative integer.
///
/// The floor root comes from integer Newton iteration; the candidate is only
/// accepted after the power is recomputed exactly.
pub fn int_nth_root(n: &Integer, k: u32) -> Option<Integer> {
    if k == 0 || n.is_negative() {
        return None;
    }
    if k == 1 || n.is_zero() || n.is_one() {
        return Some(n.clone());
    }
    let m = n.nth_root(k);
    (Pow::pow(&m, k) == *n).then_some(m)
}

/// The nonnegative square root of `r` when `r` is the square of a rational.
pub fn rat_is_square(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let num = int_nth_root(r.numer(), 2)?;
    let den = int_nth_root(r.denom(), 2)?;
    Some(Rational::new(num, den))
}

/// The real cube root of `r` when it is rational. Negative inputs are allowed.
pub fn rat_is_cube(r: &Rational) -> Option<Rational> {
    let num = int_nth_root(&r.numer().abs(), 3)?;
    let den = int_nth_root(r.denom(), 3)?;
    let root = Rational::new(num, den);
    Some(if r.is_negative() { -root } else { root })
}

/// Parses `p` or `p/q` with an optional leading minus sign and `q > 0`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = || Error::ParseRational(text.to_string());
    let s = text.trim();
    let (negative, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|c| c.is_ascii_digit());
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, d),
        None => (body, "1"),
    };
    if !digits(num) || !digits(den) {
        return Err(err());
    }
    let num = Integer::from_str(num).map_err(|_| err())?;
    let den = Integer::from_str(den).map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    let value = Rational::new(num, den);
    Ok(if negative { -value } else { value })
}

/// Canonical text form: `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Multiplies out denominators: returns `(numerators, lcm)` with `values[i] = numerators[i] / lcm`.
pub fn common_denominator(values: &[Rational]) -> (Vec<Integer>, Integer) {
    use num_integer::Integer as _;
    let lcm = values.iter().fold(Integer::one(), |acc, v| acc.lcm(v.denom()));
    let nums = values.iter().map(|v| v.numer() * (&lcm / v.denom())).collect();
    (nums, lcm)
}

/// Residue of `r` modulo the prime `p`, or `None` when `p` divides the denominator.
pub fn rational_mod(r: &Rational, p: u64) -> Option<u64> {
    let m = Integer::from(p);
    let num = mod_floor(r.numer(), &m);
    let den = mod_floor(r.denom(), &m);
    if den == 0 {
        return None;
    }
    Some(mul_mod(num, inv_mod(den, p), p))
}

fn mod_floor(n: &Integer, m: &Integer) -> u64 {
    use num_integer::Integer as _;
    let r = n.mod_floor(m);
    let (sign, digits) = r.to_u64_digits();
    debug_assert!(sign != Sign::Minus);
    digits.first().copied().unwrap_or(0)
}

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime via Fermat.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}
