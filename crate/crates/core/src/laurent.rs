//! Finitely supported Laurent polynomials in `z` with exact coefficients.

use std::collections::BTreeMap;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinatorics::Cutoffs;
use crate::scalar::Scalar;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LaurentPoly {
    coeffs: BTreeMap<i64, Scalar>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, Scalar::from_int(1))
    }

    pub fn monomial(power: i64, coeff: Scalar) -> Self {
        let mut p = Self::zero();
        p.add_term(power, coeff);
        p
    }

    pub fn add_term(&mut self, power: i64, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(power).or_insert_with(Scalar::zero);
        *slot += &coeff;
        if slot.is_zero() {
            self.coeffs.remove(&power);
        }
    }

    pub fn coeff(&self, power: i64) -> Scalar {
        self.coeffs.get(&power).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, &Scalar)> {
        self.coeffs.iter().map(|(&k, c)| (k, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(min power, max power)`, `None` for the zero polynomial.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = *self.coeffs.keys().next()?;
        let hi = *self.coeffs.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn add(&self, other: &LaurentPoly) -> Self {
        let mut out = self.clone();
        for (k, c) in other.iter() {
            out.add_term(k, c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Self::zero();
        for (k, c) in self.iter() {
            out.add_term(k, c * s);
        }
        out
    }

    pub fn mul(&self, other: &LaurentPoly) -> Self {
        let mut out = Self::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                out.add_term(a + b, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::one(), |acc, _| acc.mul(self))
    }

    pub fn into_map(self) -> BTreeMap<i64, Scalar> {
        self.coeffs
    }
}

/// One matrix element of `V(z)` as a Laurent polynomial at fixed cutoffs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LaurentSlice {
    pub coeffs: LaurentPoly,
    pub cutoffs: Cutoffs,
}

impl LaurentSlice {
    pub fn coeff(&self, w: i64) -> Scalar {
        self.coeffs.coeff(w)
    }
}
