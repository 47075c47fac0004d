//! Irreducibility over Q by exhaustive search for monic factors among
//! products of numerically isolated complex roots. Candidates are rounded to
//! integers and accepted only after exact division.

use std::collections::BTreeSet;

use itertools::Itertools;
use num_bigint::BigInt;
use num_complex::Complex;
use num_traits::{One, Signed, ToPrimitive};

use super::complex_roots::{aberth, refine_roots, to_fixed, FixedComplex};
use super::finite_field::FpPoly;
use crate::error::{Error, Result};
use crate::exact_arith::Rational;
use crate::poly::Poly;
use crate::{QPoly, ZPoly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetOracle {
    /// Working precision of the first refinement pass, in bits.
    pub start_bits: u32,
    /// Give up with [`Error::Precision`] beyond this.
    pub max_bits: u32,
    /// A coefficient is integral if within `2^-threshold_bits` of an integer.
    pub threshold_bits: u32,
    /// Number of odd primes used to restrict the possible factor degrees.
    pub sieve_primes: usize,
}

impl Default for SubsetOracle {
    fn default() -> Self {
        SubsetOracle { start_bits: 200, max_bits: 6400, threshold_bits: 40, sieve_primes: 30 }
    }
}

fn to_q(f: &ZPoly) -> QPoly {
    f.map(|c| Rational::from_integer(c.clone()))
}

fn integer_part(f: &QPoly) -> ZPoly {
    let (z, _) = crate::poly::clear_denominators(f);
    let z = z.primitive_part();
    if z.leading().is_some_and(|c| c.is_negative()) {
        -z
    } else {
        z
    }
}

/// Degrees that a factor could have, judging from factorization patterns
/// modulo small primes.
fn possible_degrees(f: &QPoly, primes: usize) -> BTreeSet<usize> {
    let n = f.degree().unwrap_or(0);
    let mut allowed: BTreeSet<usize> = (1..n).collect();
    let mut used = 0;
    for p in primal::Primes::all().skip(1).map(|p| p as u64) {
        if used == primes || allowed.is_empty() {
            break;
        }
        let Some(r) = FpPoly::from_rational(f, p) else { continue };
        if r.degree() != Some(n) || !r.is_squarefree() {
            continue;
        }
        used += 1;
        let mut sums = BTreeSet::from([0usize]);
        for &d in r.distinct_degree_pattern().parts() {
            let next: Vec<usize> = sums.iter().map(|s| s + d as usize).collect();
            sums.extend(next);
        }
        allowed.retain(|d| sums.contains(d));
    }
    allowed
}

fn approximate_roots(f: &ZPoly) -> Vec<Complex<f64>> {
    let max = f.coeffs().iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::one);
    let scaled: Vec<f64> =
        f.coeffs().iter().map(|c| Rational::new(c.clone(), max.clone()).to_f64().unwrap_or(0.0)).collect();
    aberth(&scaled, 500)
}

fn separated(roots: &[FixedComplex], bits: u32) -> bool {
    let floor = -(bits as i64) / 2;
    roots.iter().tuple_combinations().all(|(a, b)| (a - b).magnitude_log2().is_some_and(|m| m > floor))
}

impl SubsetOracle {
    /// A proper factor of `f` over Z, or `None` if `f` is irreducible.
    /// Constants and linear polynomials have no proper factor.
    pub fn find_factor(&self, f: &ZPoly) -> Result<Option<ZPoly>> {
        let n = f.degree().ok_or(Error::ZeroPolynomial("find_factor"))?;
        if self.start_bits < 64 {
            return Err(Error::Precision(self.start_bits));
        }
        if n <= 1 {
            return Ok(None);
        }
        let fq = to_q(f);
        let g = fq.gcd(&fq.derivative());
        if g.degree() > Some(0) {
            return Ok(Some(integer_part(&g)));
        }
        let allowed: Vec<usize> =
            possible_degrees(&fq, self.sieve_primes).into_iter().filter(|&d| 2 * d <= n).collect();
        if allowed.is_empty() {
            return Ok(None);
        }

        // F(y) = c^(n-1) f(y / c) is monic with integer coefficients.
        let c = f.leading().unwrap().clone();
        let mut big = Vec::with_capacity(n + 1);
        let mut power = BigInt::one();
        for i in (0..=n).rev() {
            big.push(&f.coeffs()[i] * &power);
            if i < n {
                power *= &c;
            }
        }
        big.reverse();
        big[n] = BigInt::one();
        let monic = Poly::new(big.clone());
        let monic_q = to_q(&monic);
        let cf = c.to_f64().unwrap_or(f64::INFINITY);
        let approx: Vec<Complex<f64>> = approximate_roots(f).into_iter().map(|z| z * cf).collect();

        let mut bits = self.start_bits;
        let roots = loop {
            if bits > self.max_bits {
                return Err(Error::Precision(self.max_bits));
            }
            let start = to_fixed(&approx, bits);
            match refine_roots(&big, &start, bits, bits / 4, 200) {
                Some(r) if separated(&r, bits) => break r,
                _ => bits *= 2,
            }
        };

        let tol = self.threshold_bits;
        for d in allowed {
            for subset in (0..n).combinations(d) {
                let trace = subset.iter().fold(FixedComplex::zero(bits), |acc, &i| &acc + &roots[i]);
                if trace.near_integer(tol).is_none() {
                    continue;
                }
                // coefficients of prod (x - z_i), low degree first
                let mut prod = vec![FixedComplex::from_integer(&BigInt::one(), bits)];
                for &i in &subset {
                    let mut next = vec![FixedComplex::zero(bits); prod.len() + 1];
                    for (k, p) in prod.iter().enumerate() {
                        next[k + 1] = &next[k + 1] + p;
                        next[k] = &next[k] - &(p * &roots[i]);
                    }
                    prod = next;
                }
                let Some(ints) = prod.iter().map(|z| z.near_integer(tol)).collect::<Option<Vec<_>>>() else {
                    continue;
                };
                let candidate = to_q(&Poly::new(ints));
                if candidate.divides(&monic_q) {
                    let cq = Rational::from_integer(c.clone());
                    return Ok(Some(integer_part(&candidate.scale_variable(&cq))));
                }
            }
        }
        Ok(None)
    }

    /// Irreducibility over Q. Polynomials with a repeated factor are reducible
    /// and constants are not irreducible.
    pub fn is_irreducible(&self, f: &ZPoly) -> Result<bool> {
        if f.degree() == Some(0) {
            return Ok(false);
        }
        Ok(self.find_factor(f)?.is_none())
    }
}

/// [`SubsetOracle::find_factor`] with default settings.
pub fn find_factor(f: &ZPoly) -> Result<Option<ZPoly>> {
    SubsetOracle::default().find_factor(f)
}

/// [`SubsetOracle::is_irreducible`] with default settings.
pub fn irreducible_over_q(f: &ZPoly) -> Result<bool> {
    SubsetOracle::default().is_irreducible(f)
}
