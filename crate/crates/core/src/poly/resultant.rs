//! Resultants and discriminants.
//!
//! Over an integral domain the resultant comes from the subresultant
//! pseudo-remainder sequence, which keeps coefficient growth polynomial.
//! Rational inputs are scaled to integer polynomials first and the
//! denominators restored at the end.

use num_traits::Pow;

use super::rational::clear_denominators;
use super::Poly;
use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::scalar::{Field, IntegralDomain};
use crate::QPoly;

fn power<T: IntegralDomain>(base: &T, exp: usize) -> T {
    (0..exp).fold(T::one(), |acc, _| acc * base.clone())
}

impl<T: IntegralDomain> Poly<T> {
    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> T {
        self.coeffs().iter().fold(T::zero(), |acc, c| acc.gcd(c))
    }

    pub fn primitive_part(&self) -> Self {
        let c = self.content();
        if c.is_zero() {
            return self.clone();
        }
        self.exact_div_scalar(&c)
    }

    fn exact_div_scalar(&self, c: &T) -> Self {
        self.map(|v| v.clone() / c.clone())
    }

    /// `lc(d)^(deg self - deg d + 1) * self mod d`, computed without division.
    pub fn pseudo_rem(&self, d: &Self) -> Result<Self> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let Some(ds) = self.degree() else {
            return Ok(Self::zero());
        };
        if ds < dd {
            return Ok(self.clone());
        }
        let lead = d.leading().unwrap().clone();
        let mut r = self.clone();
        let mut remaining = ds - dd + 1;
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(&lead) - &d.scale(&lr).shift(rd - dd);
            remaining -= 1;
        }
        Ok(r.scale(&power(&lead, remaining)))
    }

    /// Resultant via the subresultant PRS.
    pub fn subresultant(&self, other: &Self) -> Result<T> {
        let (Some(mut da), Some(mut db)) = (self.degree(), other.degree()) else {
            return Err(Error::ZeroPolynomial("resultant"));
        };
        let (mut a, mut b) = (self.clone(), other.clone());
        let mut sign = T::one();
        if da < db {
            std::mem::swap(&mut a, &mut b);
            std::mem::swap(&mut da, &mut db);
            if da % 2 == 1 && db % 2 == 1 {
                sign = -sign;
            }
        }
        if db == 0 {
            return Ok(sign * power(b.leading().unwrap(), da));
        }
        let (ca, cb) = (a.content(), b.content());
        a = a.exact_div_scalar(&ca);
        b = b.exact_div_scalar(&cb);
        let scale = power(&ca, db) * power(&cb, da);
        let mut g = T::one();
        let mut h = T::one();
        loop {
            let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
            let delta = da - db;
            if da % 2 == 1 && db % 2 == 1 {
                sign = -sign;
            }
            let r = a.pseudo_rem(&b)?;
            if r.is_zero() {
                return Ok(T::zero());
            }
            a = b;
            b = r.exact_div_scalar(&(g.clone() * power(&h, delta)));
            g = a.leading().unwrap().clone();
            h = if delta == 0 { h } else { power(&g, delta) / power(&h, delta - 1) };
            if b.degree() == Some(0) {
                let da = a.degree().unwrap();
                let lb = b.leading().unwrap().clone();
                let h = power(&lb, da) / power(&h, da - 1);
                return Ok(sign * scale * h);
            }
        }
    }
}

/// Resultant over a field by the Euclidean remainder sequence.
pub fn resultant_field<T: Field>(p: &Poly<T>, q: &Poly<T>) -> Result<T> {
    if p.is_zero() || q.is_zero() {
        return Err(Error::ZeroPolynomial("resultant"));
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    let mut acc = T::one();
    loop {
        let (m, n) = (a.degree().unwrap(), b.degree().unwrap());
        let lb = b.leading().unwrap().clone();
        if n == 0 {
            return Ok(acc * (0..m).fold(T::one(), |x, _| x * lb.clone()));
        }
        let r = a.rem(&b)?;
        let Some(rd) = r.degree() else {
            return Ok(T::zero());
        };
        if m * n % 2 == 1 {
            acc = -acc;
        }
        acc = (0..m - rd).fold(acc, |x, _| x * lb.clone());
        a = b;
        b = r;
    }
}

/// Sylvester-convention resultant of two rational polynomials.
pub fn resultant(p: &QPoly, q: &QPoly) -> Result<Rational> {
    let (Some(dp), Some(dq)) = (p.degree(), q.degree()) else {
        return Err(Error::ZeroPolynomial("resultant"));
    };
    let (pz, lp) = clear_denominators(p);
    let (qz, lq) = clear_denominators(q);
    let res = pz.subresultant(&qz)?;
    let denom = Pow::pow(&lp, dq) * Pow::pow(&lq, dp);
    Ok(Rational::new(res, denom))
}

/// `(-1)^(n(n-1)/2) Res(p, p') / lc(p)`.
pub fn discriminant(p: &QPoly) -> Result<Rational> {
    let n = p.degree().unwrap_or(0);
    if n < 2 {
        return Err(Error::DegreeTooSmall { op: "discriminant", found: n, min: 2 });
    }
    let res = resultant(p, &p.derivative())?;
    let value = res / p.leading().unwrap();
    Ok(if (n * (n - 1) / 2) % 2 == 1 { -value } else { value })
}

/// Determinant of the Sylvester matrix by fraction-free elimination. Slow,
/// intended only as an independent check of the faster routes.
pub fn sylvester_resultant<T: IntegralDomain>(p: &Poly<T>, q: &Poly<T>) -> T {
    let (m, n) = (p.degree().unwrap(), q.degree().unwrap());
    let size = m + n;
    if size == 0 {
        return T::one();
    }
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![T::zero(); size];
        for (j, c) in p.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![T::zero(); size];
        for (j, c) in q.coeffs().iter().rev().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    bareiss_det(rows)
}

fn bareiss_det<T: IntegralDomain>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return T::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone();
                m[i][j] = v / prev.clone();
            }
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}
