//! Rational-coefficient helpers: denominator clearing, rational roots and
//! exact polynomial square roots.

use std::collections::BTreeSet;

use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Poly;
use crate::exact_arith::{common_denominator, rat_is_square, Integer, Rational};
use crate::{QPoly, ZPoly};

/// `p = z / l` with `z` integral and `l > 0` the lcm of the denominators.
pub fn clear_denominators(p: &QPoly) -> (ZPoly, Integer) {
    let (nums, l) = common_denominator(p.coeffs());
    (Poly::new(nums), l)
}

/// Positive divisors of `|n|`, `n != 0`, by trial division.
fn divisors(n: &Integer) -> Vec<Integer> {
    let mut n = n.abs();
    let mut factors: Vec<(Integer, u32)> = Vec::new();
    let mut d = Integer::from(2);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            let mut e = 0;
            while (&n % &d).is_zero() {
                n /= &d;
                e += 1;
            }
            factors.push((d.clone(), e));
        }
        d += if d == Integer::from(2) { 1 } else { 2 };
    }
    if n > Integer::one() {
        factors.push((n, 1));
    }
    let mut out = vec![Integer::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for base in &out {
            let mut v = base.clone();
            for _ in 0..=e {
                next.push(v.clone());
                v *= &p;
            }
        }
        out = next;
    }
    out
}

/// All distinct rational roots, in increasing order. Every candidate from the
/// rational root theorem is confirmed by exact evaluation.
pub fn rational_roots(p: &QPoly) -> Vec<Rational> {
    let mut roots = BTreeSet::new();
    let (z, _) = clear_denominators(p);
    let Some(low) = z.coeffs().iter().position(|c| !c.is_zero()) else {
        return Vec::new();
    };
    if low > 0 {
        roots.insert(Rational::zero());
    }
    let trimmed = Poly::new(z.coeffs()[low..].to_vec());
    if trimmed.degree().unwrap_or(0) == 0 {
        return roots.into_iter().collect();
    }
    let qp: QPoly = trimmed.map(|c| Rational::from_integer(c.clone()));
    let nums = divisors(&trimmed.coeffs()[0]);
    let dens = divisors(trimmed.leading().unwrap());
    for d in &dens {
        for n in &nums {
            if !n.gcd(d).is_one() {
                continue;
            }
            for cand in [Rational::new(n.clone(), d.clone()), Rational::new(-n, d.clone())] {
                if qp.eval(&cand).is_zero() {
                    roots.insert(cand);
                }
            }
        }
    }
    roots.into_iter().collect()
}

impl QPoly {
    /// The square root with positive leading coefficient, if `self` is a
    /// perfect square in `Q[x]`. Coefficients are solved top-down and the
    /// result is confirmed by squaring.
    pub fn sqrt(&self) -> Option<QPoly> {
        let n = self.degree()?;
        if n % 2 == 1 {
            return None;
        }
        let m = n / 2;
        let top = rat_is_square(self.leading()?)?;
        let two_top = &top * Integer::from(2);
        let mut s = vec![Rational::zero(); m + 1];
        s[m] = top;
        for k in (0..m).rev() {
            // coefficient of x^(m+k) in s^2 = 2 s_m s_k + sum_{i+j=m+k, k<i,j<m} s_i s_j
            let mut acc = self.coeff(m + k);
            for i in k + 1..m {
                let j = m + k - i;
                if j > k && j < m {
                    acc -= &s[i] * &s[j];
                }
            }
            s[k] = acc / &two_top;
        }
        let root = Poly::new(s);
        (&root * &root == *self).then_some(root)
    }

    /// Numerators as `i64` when every coefficient is an integer that fits.
    pub fn to_i64_coeffs(&self) -> Option<Vec<i64>> {
        self.coeffs().iter().map(|c| if c.is_integer() { c.numer().to_i64() } else { None }).collect()
    }
}
