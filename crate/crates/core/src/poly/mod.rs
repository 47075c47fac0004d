//! Dense univariate polynomials, generic over the coefficient scalar.

mod interpolate;
mod quotient;
mod rational;
mod resultant;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::scalar::{Field, Scalar};

pub use interpolate::interpolate;
pub use quotient::ModElement;
pub use rational::{clear_denominators, rational_roots};
pub use resultant::{discriminant, resultant, resultant_field, sylvester_resultant};

/// `coeffs[i]` is the coefficient of `x^i`; the last entry is never zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c x^k`
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// Builds `sum c * x^k` from `(c, k)` pairs; repeated powers accumulate.
    pub fn from_terms<I: IntoIterator<Item = (T, usize)>>(terms: I) -> Self {
        let mut coeffs: Vec<T> = Vec::new();
        for (c, k) in terms {
            if coeffs.len() <= k {
                coeffs.resize(k + 1, T::zero());
            }
            coeffs[k] = coeffs[k].clone() + c;
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs.iter().rev().fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * T::from_usize(i).expect("degree fits the scalar"))
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|v| v.clone() * c.clone()).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![T::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// `g(x^k)`: coefficient `i` moves to position `i * k`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k > 0, "compose_power needs a positive exponent");
        let mut coeffs = vec![T::zero(); self.degree().map_or(0, |d| d * k + 1)];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `self(inner(x))` by Horner's rule.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// `self(c x)`.
    pub fn scale_variable(&self, c: &T) -> Self {
        let mut power = T::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for v in &self.coeffs {
            coeffs.push(v.clone() * power.clone());
            power = power * c.clone();
        }
        Self::new(coeffs)
    }

    /// `x^n self(1/x)` with `n = deg self`.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Field> Poly<T> {
    /// Quotient and remainder with `deg rem < deg divisor`.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let lead = divisor.leading().ok_or(Error::DivisionByZero)?;
        let dd = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv = T::one() / lead.clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![T::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd].clone() * inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * d.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.divrem(divisor)?.1)
    }

    /// `Some(quotient)` when the division is exact.
    pub fn exact_div(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.divrem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.rem(self).is_ok_and(|r| r.is_zero())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(l) => {
                let inv = T::one() / l.clone();
                self.scale(&inv)
            }
            None => Self::zero(),
        }
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl<T: Scalar> $tr<Poly<T>> for Poly<T> {
            type Output = Poly<T>;
            fn $method(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$method(&rhs)
            }
        }
    };
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

/// Human-readable form, highest power first: `x^12 + 8x^6 - 1/2x + 3`.
impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let (negative, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            match (first, negative) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            let unit = mag == "1";
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}")?;
                    }
                    if k == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Machine form: JSON array of coefficient strings, index = power.
impl<T: Scalar + fmt::Display> Serialize for Poly<T> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}

impl<'de, T: Scalar + FromStr> Deserialize<'de> for Poly<T> {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw: Vec<String> = Vec::deserialize(deserializer)?;
        let coeffs = raw
            .iter()
            .map(|s| s.parse::<T>().map_err(|_| D::Error::custom(format!("bad coefficient {s:?}"))))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(Poly::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_arith::{rat, ratio, Rational};
    use crate::QPoly;

    pub(crate) fn q(coeffs: &[i64]) -> QPoly {
        Poly::new(coeffs.iter().map(|&c| rat(c)).collect())
    }

    #[test]
    fn ring_operations() {
        assert_eq!(&q(&[1, 1]) * &q(&[-1, 1]), q(&[-1, 0, 1]));
        assert_eq!(&q(&[1, 2, 3]) + &q(&[-1, -2, -3]), QPoly::zero());
        assert_eq!(-q(&[1, -1]), q(&[-1, 1]));
        assert_eq!(q(&[0, 0, 0]).degree(), None);
        assert_eq!(q(&[1, 1]).pow(3), q(&[1, 3, 3, 1]));
    }

    #[test]
    fn division() {
        let d = q(&[8, 0, 0, 0, 0, 0, 8, 0, 0, 0, 0, 0, 1]);
        assert_eq!(d.divrem(&d).unwrap(), (QPoly::one(), QPoly::zero()));
        let (quot, rem) = q(&[2, -3, 0, 1]).divrem(&q(&[-1, 1])).unwrap();
        assert_eq!(quot, q(&[-2, 1, 1]));
        assert!(rem.is_zero());
        assert_eq!(q(&[1, 1]).divrem(&QPoly::zero()), Err(Error::DivisionByZero));
        let (quot, rem) = q(&[1, 0, 1]).divrem(&q(&[0, 2])).unwrap();
        assert_eq!(quot, Poly::new(vec![rat(0), ratio(1, 2)]));
        assert_eq!(rem, q(&[1]));
    }

    #[test]
    fn power_composition() {
        let (a, b) = (ratio(3, 7), rat(-5));
        let quad = Poly::new(vec![b.clone(), a.clone(), rat(1)]);
        let quartic = Poly::new(vec![b.clone(), rat(0), a.clone(), rat(0), rat(1)]);
        let f = quad.compose_power(6);
        assert_eq!(f.degree(), Some(12));
        assert_eq!(f.coeff(6), a);
        assert_eq!(f.coeff(0), b);
        assert_eq!(quartic.compose_power(3), f);
        assert_eq!(quad.compose_power(1), quad);
    }

    #[test]
    fn composition_and_scaling() {
        let f = q(&[1, 2, 1]);
        assert_eq!(f.compose(&q(&[1, 1])), q(&[4, 4, 1]));
        assert_eq!(f.scale_variable(&rat(2)), q(&[1, 4, 4]));
        assert_eq!(q(&[1, 2, 3]).reversed(), q(&[3, 2, 1]));
        assert_eq!(q(&[5, 0, 3]).derivative(), q(&[0, 6]));
        assert_eq!(f.eval(&rat(3)), rat(16));
    }

    #[test]
    fn gcd_and_squarefree() {
        let a = &q(&[-1, 1]) * &q(&[2, 1]);
        let b = &q(&[-1, 1]) * &q(&[5, 0, 1]);
        assert_eq!(a.gcd(&b), q(&[-1, 1]));
        assert!(!q(&[1, 2, 1]).is_squarefree());
        assert!(q(&[-1, 0, 1]).is_squarefree());
    }

    #[test]
    fn float_coefficients() {
        let p: Poly<f64> = Poly::new(vec![-1.0, 0.0, 1.0]);
        let (quot, rem) = p.divrem(&Poly::new(vec![-1.0, 1.0])).unwrap();
        assert_eq!(quot.coeffs(), &[1.0, 1.0]);
        assert!(rem.is_zero());
    }

    #[test]
    fn text_forms() {
        let f = Poly::new(vec![ratio(-1, 2), rat(-1), rat(0), rat(1)]);
        assert_eq!(f.to_string(), "x^3 - x - 1/2");
        assert_eq!(q(&[8, 0, 0, 0, 0, 0, -1, 0, 0, 0, 0, 0, 1]).to_string(), "x^12 - x^6 + 8");
        assert_eq!(QPoly::zero().to_string(), "0");
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"["-1/2","-1","0","1"]"#);
        let back: Poly<Rational> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, f);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        pub(crate) fn small_poly(max_deg: usize) -> impl Strategy<Value = QPoly> {
            proptest::collection::vec((-20i64..=20, 1i64..=5), 0..=max_deg + 1)
                .prop_map(|v| Poly::new(v.into_iter().map(|(n, d)| ratio(n, d)).collect()))
        }

        proptest! {
            #[test]
            fn divrem_round_trip(p in small_poly(10), d in small_poly(6)) {
                prop_assume!(!d.is_zero());
                let (quot, rem) = p.divrem(&d).unwrap();
                prop_assert!(rem.degree().is_none_or(|r| r < d.degree().unwrap()) || d.degree() == Some(0) && rem.is_zero());
                prop_assert_eq!(&(&quot * &d) + &rem, p);
            }
        }
    }
}
