use std::sync::Arc;

use super::Poly;
use crate::error::{Error, Result};
use crate::scalar::Field;

/// An element of `F[x]/(m)` for a monic modulus `m` of positive degree,
/// stored as its fully reduced representative.
#[derive(Clone, Debug, PartialEq)]
pub struct ModElement<T> {
    modulus: Arc<Poly<T>>,
    rep: Poly<T>,
}

impl<T: Field> ModElement<T> {
    pub fn new(modulus: Arc<Poly<T>>, rep: Poly<T>) -> Result<Self> {
        if !modulus.is_monic() || modulus.degree() == Some(0) {
            return Err(Error::Precondition("quotient modulus must be monic of positive degree".into()));
        }
        let rep = rep.rem(&modulus)?;
        Ok(ModElement { modulus, rep })
    }

    pub fn rep(&self) -> &Poly<T> {
        &self.rep
    }

    pub fn modulus(&self) -> &Poly<T> {
        &self.modulus
    }

    fn with_rep(&self, rep: Poly<T>) -> Self {
        ModElement { modulus: Arc::clone(&self.modulus), rep }
    }

    pub fn one(&self) -> Self {
        self.with_rep(Poly::one())
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.modulus, other.modulus);
        let prod = &self.rep * &other.rep;
        self.with_rep(prod.rem(&self.modulus).expect("modulus is nonzero"))
    }

    pub fn add(&self, other: &Self) -> Self {
        self.with_rep(&self.rep + &other.rep)
    }

    /// Square-and-multiply; `e^0 = 1`.
    pub fn pow(&self, mut k: u64) -> Self {
        let mut acc = self.one();
        let mut base = self.clone();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }
}
