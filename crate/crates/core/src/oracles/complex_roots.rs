//! Simultaneous root finding: Aberth iteration in any float type, then the
//! same iteration in big fixed-point arithmetic to reach arbitrary accuracy.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{Float, FloatConst, Signed, ToPrimitive, Zero};

fn horner<T: Float>(coeffs: &[T], z: Complex<T>) -> (Complex<T>, Complex<T>) {
    let mut p = Complex::new(T::zero(), T::zero());
    let mut dp = p;
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + Complex::new(c, T::zero());
    }
    (p, dp)
}

/// Approximate roots of `sum coeffs[i] x^i` (leading coefficient nonzero).
/// Runs at most `max_iter` sweeps; accuracy is limited by `T`.
pub fn aberth<T: Float + FloatConst>(coeffs: &[T], max_iter: usize) -> Vec<Complex<T>> {
    let n = coeffs.len().saturating_sub(1);
    if n == 0 {
        return Vec::new();
    }
    let lead = coeffs[n];
    let radius = coeffs[..n].iter().fold(T::zero(), |m, &c| m.max((c / lead).abs())) + T::one();
    let nt = T::from(n).unwrap();
    let offset = T::from(0.4).unwrap();
    let mut z: Vec<Complex<T>> =
        (0..n).map(|k| Complex::from_polar(radius, T::TAU() * T::from(k).unwrap() / nt + offset)).collect();
    let tol = T::epsilon() * T::from(4.0).unwrap();
    for _ in 0..max_iter {
        let mut worst = T::zero();
        for k in 0..n {
            let (p, dp) = horner(coeffs, z[k]);
            if p.norm() == T::zero() {
                continue;
            }
            let w = p / dp;
            let s =
                (0..n).filter(|&j| j != k).fold(Complex::new(T::zero(), T::zero()), |acc, j| acc + (z[k] - z[j]).inv());
            let step = w / (Complex::new(T::one(), T::zero()) - w * s);
            if step.re.is_nan() || step.im.is_nan() {
                continue;
            }
            z[k] = z[k] - step;
            worst = worst.max(step.norm() / z[k].norm().max(T::one()));
        }
        if worst <= tol {
            break;
        }
    }
    z
}

/// Complex number `(re + i im) / 2^bits` with big integer parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedComplex {
    re: BigInt,
    im: BigInt,
    bits: u32,
}

fn f64_to_fixed(x: f64, bits: u32) -> BigInt {
    if x == 0.0 || !x.is_finite() {
        return BigInt::zero();
    }
    let (mantissa, exponent, sign) = x.integer_decode();
    let m = BigInt::from(mantissa);
    let shift = exponent as i64 + bits as i64;
    let v = if shift >= 0 { m << shift as usize } else { m >> (-shift) as usize };
    if sign < 0 {
        -v
    } else {
        v
    }
}

fn fixed_to_f64(v: &BigInt, bits: u32) -> f64 {
    let drop = bits.saturating_sub(60);
    let kept = (v >> drop as usize).to_f64().unwrap_or(f64::NAN);
    kept * (-((bits - drop) as f64)).exp2()
}

fn round_shift(v: BigInt, k: u32) -> BigInt {
    if k == 0 {
        return v;
    }
    (v + (BigInt::from(1) << (k - 1) as usize)) >> k as usize
}

impl FixedComplex {
    pub fn zero(bits: u32) -> Self {
        FixedComplex { re: BigInt::zero(), im: BigInt::zero(), bits }
    }

    pub fn from_integer(n: &BigInt, bits: u32) -> Self {
        FixedComplex { re: n << bits as usize, im: BigInt::zero(), bits }
    }

    pub fn from_complex(z: Complex<f64>, bits: u32) -> Self {
        FixedComplex { re: f64_to_fixed(z.re, bits), im: f64_to_fixed(z.im, bits), bits }
    }

    pub fn to_complex(&self) -> Complex<f64> {
        Complex::new(fixed_to_f64(&self.re, self.bits), fixed_to_f64(&self.im, self.bits))
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn with_bits(&self, bits: u32) -> Self {
        let conv = |v: &BigInt| {
            if bits >= self.bits {
                v << (bits - self.bits) as usize
            } else {
                round_shift(v.clone(), self.bits - bits)
            }
        };
        FixedComplex { re: conv(&self.re), im: conv(&self.im), bits }
    }

    /// `|z|^2` scaled by `2^bits`.
    pub fn norm_sqr_raw(&self) -> BigInt {
        round_shift(&self.re * &self.re + &self.im * &self.im, self.bits)
    }

    /// Base-2 logarithm of `|z|`, rounded up; `None` for zero.
    pub fn magnitude_log2(&self) -> Option<i64> {
        let m = self.re.abs().max(self.im.abs());
        (!m.is_zero()).then(|| m.bits() as i64 - self.bits as i64 + 1)
    }

    pub fn inv(&self) -> Option<Self> {
        let norm = &self.re * &self.re + &self.im * &self.im;
        if norm.is_zero() {
            return None;
        }
        let scale = BigInt::from(1) << (2 * self.bits) as usize;
        Some(FixedComplex { re: &self.re * &scale / &norm, im: -(&self.im * &scale / &norm), bits: self.bits })
    }

    /// The nearest Gaussian integer's real part, if `z` lies within `2^-tol`
    /// of a real integer.
    pub fn near_integer(&self, tol: u32) -> Option<BigInt> {
        let n = round_shift(self.re.clone(), self.bits);
        let limit = BigInt::from(1) << (self.bits.saturating_sub(tol)) as usize;
        let dre = &self.re - (&n << self.bits as usize);
        (dre.abs() < limit && self.im.abs() < limit).then_some(n)
    }
}

impl Add for &FixedComplex {
    type Output = FixedComplex;
    fn add(self, o: &FixedComplex) -> FixedComplex {
        FixedComplex { re: &self.re + &o.re, im: &self.im + &o.im, bits: self.bits }
    }
}

impl Sub for &FixedComplex {
    type Output = FixedComplex;
    fn sub(self, o: &FixedComplex) -> FixedComplex {
        FixedComplex { re: &self.re - &o.re, im: &self.im - &o.im, bits: self.bits }
    }
}

impl Mul for &FixedComplex {
    type Output = FixedComplex;
    fn mul(self, o: &FixedComplex) -> FixedComplex {
        let re = &self.re * &o.re - &self.im * &o.im;
        let im = &self.re * &o.im + &self.im * &o.re;
        FixedComplex { re: round_shift(re, self.bits), im: round_shift(im, self.bits), bits: self.bits }
    }
}

impl Neg for &FixedComplex {
    type Output = FixedComplex;
    fn neg(self) -> FixedComplex {
        FixedComplex { re: -&self.re, im: -&self.im, bits: self.bits }
    }
}

fn fixed_horner(coeffs: &[BigInt], z: &FixedComplex) -> (FixedComplex, FixedComplex) {
    let bits = z.bits;
    let mut p = FixedComplex::zero(bits);
    let mut dp = FixedComplex::zero(bits);
    for c in coeffs.iter().rev() {
        dp = &(&dp * z) + &p;
        p = &(&p * z) + &FixedComplex::from_integer(c, bits);
    }
    (p, dp)
}

/// Polishes `approx` to roots of the integer polynomial `coeffs` at `bits`
/// bits of precision. `None` unless every correction falls below
/// `2^-(bits - margin)` within `max_iter` sweeps.
pub(crate) fn refine_roots(
    coeffs: &[BigInt],
    approx: &[FixedComplex],
    bits: u32,
    margin: u32,
    max_iter: usize,
) -> Option<Vec<FixedComplex>> {
    let n = approx.len();
    let mut z: Vec<FixedComplex> = approx.iter().map(|r| r.with_bits(bits)).collect();
    let one = FixedComplex::from_integer(&BigInt::from(1), bits);
    let target = -(bits as i64 - margin as i64);
    for _ in 0..max_iter {
        let mut converged = true;
        for k in 0..n {
            let (p, dp) = fixed_horner(coeffs, &z[k]);
            if p.re.is_zero() && p.im.is_zero() {
                continue;
            }
            let w = &p * &dp.inv()?;
            let mut s = FixedComplex::zero(bits);
            for j in (0..n).filter(|&j| j != k) {
                s = &s + &(&z[k] - &z[j]).inv()?;
            }
            let step = &w * &(&one - &(&w * &s)).inv()?;
            let scale = z[k].magnitude_log2().unwrap_or(0).max(0);
            if step.magnitude_log2().is_some_and(|m| m - scale > target) {
                converged = false;
            }
            z[k] = &z[k] - &step;
        }
        if converged {
            return Some(z);
        }
    }
    None
}

pub(crate) fn to_fixed(roots: &[Complex<f64>], bits: u32) -> Vec<FixedComplex> {
    roots.iter().map(|&z| FixedComplex::from_complex(z, bits)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sorted(mut v: Vec<Complex<f64>>) -> Vec<Complex<f64>> {
        v.sort_by(|a, b| (a.re, a.im).partial_cmp(&(b.re, b.im)).unwrap());
        v
    }

    #[test]
    fn aberth_roots_of_unity() {
        let roots = sorted(aberth(&[-1.0, 0.0, 0.0, 1.0], 200));
        let expect = sorted(vec![
            Complex::new(1.0, 0.0),
            Complex::new(-0.5, 3f64.sqrt() / 2.0),
            Complex::new(-0.5, -(3f64.sqrt()) / 2.0),
        ]);
        for (r, e) in roots.iter().zip(&expect) {
            assert!((r - e).norm() < 1e-12);
        }
    }

    #[test]
    fn aberth_generic_over_f32() {
        let roots = aberth(&[1.0f32, 0.0, 1.0], 100);
        assert!(roots.iter().all(|z| (z.norm() - 1.0).abs() < 1e-5 && z.re.abs() < 1e-5));
    }

    #[test]
    fn fixed_point_arithmetic() {
        let bits = 100;
        let a = FixedComplex::from_complex(Complex::new(1.5, -2.0), bits);
        let b = FixedComplex::from_complex(Complex::new(0.25, 4.0), bits);
        let prod = (&a * &b).to_complex();
        let expect = Complex::new(1.5, -2.0) * Complex::new(0.25, 4.0);
        assert!((prod - expect).norm() < 1e-12);
        let q = (&a * &b.inv().unwrap()).to_complex();
        assert!((q - Complex::new(1.5, -2.0) / Complex::new(0.25, 4.0)).norm() < 1e-12);
        assert_eq!(FixedComplex::from_integer(&BigInt::from(-7), bits).near_integer(40), Some(BigInt::from(-7)));
        assert_eq!(a.near_integer(40), None);
        assert_eq!(a.with_bits(300).with_bits(bits), a);
    }

    #[test]
    fn refinement_reaches_high_precision() {
        // x^2 - 2
        let coeffs = [BigInt::from(-2), BigInt::zero(), BigInt::from(1)];
        let approx = to_fixed(&aberth(&[-2.0, 0.0, 1.0], 100), 64);
        let roots = refine_roots(&coeffs, &approx, 400, 16, 50).unwrap();
        for r in &roots {
            let sq = r * r;
            assert_eq!(sq.near_integer(350), Some(BigInt::from(2)));
        }
    }
}
