//! Dense polynomials over a word-sized prime field and distinct-degree
//! factorization, which only needs the degree multiset, never the factors.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact_arith::{inv_mod, rational_mod};
use crate::QPoly;

#[inline]
fn mul(a: u64, b: u64, p: u64) -> u64 {
    if p < (1 << 32) {
        a * b % p
    } else {
        ((a as u128 * b as u128) % p as u128) as u64
    }
}

#[inline]
fn sub(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + (p - b)
    }
}

/// Polynomial over `F_p`; `coeffs[i]` multiplies `x^i`, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    /// Reduction of a rational polynomial; `None` if `p` divides a denominator.
    pub fn from_rational(f: &QPoly, p: u64) -> Option<Self> {
        let coeffs = f.coeffs().iter().map(|c| rational_mod(c, p)).collect::<Option<Vec<_>>>()?;
        Some(Self::new(p, coeffs))
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn x(p: u64) -> Self {
        Self::new(p, vec![0, 1])
    }

    pub fn monic(&self) -> Self {
        let Some(&lead) = self.coeffs.last() else {
            return self.clone();
        };
        let inv = inv_mod(lead, self.p);
        FpPoly { p: self.p, coeffs: self.coeffs.iter().map(|&c| mul(c, inv, self.p)).collect() }
    }

    pub fn derivative(&self) -> Self {
        let p = self.p;
        Self::new(p, self.coeffs.iter().enumerate().skip(1).map(|(i, &c)| mul(c, i as u64 % p, p)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let get = |v: &[u64], i: usize| v.get(i).copied().unwrap_or(0);
        Self::new(self.p, (0..n).map(|i| sub(get(&self.coeffs, i), get(&other.coeffs, i), self.p)).collect())
    }

    /// In-place reduction of `r` modulo the monic `m`.
    fn reduce(r: &mut Vec<u64>, m: &[u64], p: u64) {
        let dm = m.len() - 1;
        while r.len() > dm {
            let top = r.pop().unwrap();
            if top != 0 {
                let base = r.len() - dm;
                for (j, &c) in m[..dm].iter().enumerate() {
                    r[base + j] = sub(r[base + j], mul(top, c, p), p);
                }
            }
        }
        while r.last() == Some(&0) {
            r.pop();
        }
    }

    /// Remainder modulo a nonzero divisor.
    pub fn rem(&self, m: &Self) -> Self {
        let m = m.monic();
        let mut r = self.coeffs.clone();
        Self::reduce(&mut r, &m.coeffs, self.p);
        FpPoly { p: self.p, coeffs: r }
    }

    /// Quotient by a nonzero divisor (remainder discarded).
    pub fn div(&self, d: &Self) -> Self {
        let p = self.p;
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() <= dd {
            return Self::new(p, vec![]);
        }
        let inv = inv_mod(*d.coeffs.last().unwrap(), p);
        let mut r = self.coeffs.clone();
        let mut q = vec![0; r.len() - dd];
        for k in (0..q.len()).rev() {
            let c = mul(r[k + dd], inv, p);
            q[k] = c;
            if c != 0 {
                for (j, &dj) in d.coeffs.iter().enumerate() {
                    r[k + j] = sub(r[k + j], mul(c, dj, p), p);
                }
            }
        }
        Self::new(p, q)
    }

    fn mulmod(a: &[u64], b: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                let k = i + j;
                out[k] += mul(x, y, p);
                if out[k] >= p {
                    out[k] -= p;
                }
            }
        }
        Self::reduce(&mut out, m, p);
        out
    }

    /// `base^e mod m` for monic `m`.
    fn powmod(base: &[u64], mut e: u64, m: &[u64], p: u64) -> Vec<u64> {
        let mut acc = vec![1u64];
        Self::reduce(&mut acc, m, p);
        let mut b = base.to_vec();
        Self::reduce(&mut b, m, p);
        while e > 0 {
            if e & 1 == 1 {
                acc = Self::mulmod(&acc, &b, m, p);
            }
            e >>= 1;
            if e > 0 {
                b = Self::mulmod(&b, &b, m, p);
            }
        }
        acc
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// Irreducible-factor degrees of a monic squarefree polynomial.
    ///
    /// Frobenius is `F_p`-linear, so `h ↦ h^p mod f` is applied through the
    /// precomputed images `x^(ip) mod f` instead of by repeated powering.
    pub fn distinct_degree_pattern(&self) -> DegreePattern {
        let p = self.p;
        let f = self.monic();
        let n = f.degree().unwrap_or(0);
        if n == 0 {
            return DegreePattern(Vec::new());
        }
        let xp = Self::powmod(&[0, 1], p, &f.coeffs, p);
        let mut images: Vec<Vec<u64>> = Vec::with_capacity(n);
        let mut cur = vec![1u64];
        Self::reduce(&mut cur, &f.coeffs, p);
        for _ in 0..n {
            images.push(cur.clone());
            cur = Self::mulmod(&cur, &xp, &f.coeffs, p);
        }
        let frobenius = |h: &[u64]| -> Vec<u64> {
            let mut out = vec![0u64; n];
            for (i, &c) in h.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for (k, &v) in images[i].iter().enumerate() {
                    out[k] += mul(c, v, p);
                    if out[k] >= p {
                        out[k] -= p;
                    }
                }
            }
            while out.last() == Some(&0) {
                out.pop();
            }
            out
        };
        let mut parts = Vec::new();
        let mut g = f.clone();
        let mut h = xp.clone();
        let x = Self::x(p);
        let mut d = 1usize;
        while g.degree().unwrap() >= 2 * d {
            let hx = FpPoly { p, coeffs: h.clone() }.sub(&x);
            let t = g.gcd(&hx.rem(&g));
            let td = t.degree().unwrap_or(0);
            if td > 0 {
                parts.extend(std::iter::repeat_n(d as u32, td / d));
                g = g.div(&t);
            }
            d += 1;
            h = frobenius(&h);
        }
        if let Some(gd) = g.degree().filter(|&gd| gd > 0) {
            parts.push(gd as u32);
        }
        parts.sort_unstable();
        DegreePattern(parts)
    }
}

/// Sorted multiset of irreducible-factor degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreePattern(Vec<u32>);

impl DegreePattern {
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.sort_unstable();
        DegreePattern(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    /// All factors linear.
    pub fn is_split(&self) -> bool {
        self.0.iter().all(|&d| d == 1)
    }

    /// Sign of the matching cycle type: `Σ (d_i - 1)` even.
    pub fn is_even(&self) -> bool {
        self.0.iter().map(|&d| d - 1).sum::<u32>() % 2 == 0
    }

    /// Order of the matching permutation.
    pub fn lcm(&self) -> u64 {
        use num_integer::Integer;
        self.0.iter().fold(1u64, |acc, &d| acc.lcm(&(d as u64)))
    }
}

impl fmt::Display for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl Serialize for DegreePattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Factorization pattern of `f mod p`, or `None` when `f mod p` is not
/// squarefree (ramified or degenerate prime).
pub fn degree_pattern_mod_p(f: &QPoly, p: u64) -> Result<Option<DegreePattern>> {
    if p.is_multiple_of(2) || !primal::is_prime(p) || p >= (1 << 62) {
        return Err(Error::InvalidPrime(p));
    }
    let reduced = FpPoly::from_rational(f, p)
        .ok_or_else(|| Error::Precondition(format!("{p} divides a coefficient denominator")))?;
    if reduced.degree() != f.degree() {
        return Err(Error::Precondition(format!("{p} divides the leading coefficient")));
    }
    if !reduced.is_squarefree() {
        return Ok(None);
    }
    Ok(Some(reduced.distinct_degree_pattern()))
}
