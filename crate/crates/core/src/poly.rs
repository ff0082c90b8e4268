//! Sparse multivariate polynomials in `x_1..x_K` with exact coefficients.

use serde::{Deserialize, Serialize};

use crate::fock::FockVector;
use crate::multi_index::MultiIndex;
use crate::render;
use crate::scalar::Scalar;

/// Shares its storage with `FockVector`: both are finite sums of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    inner: FockVector,
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.inner.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polynomial {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        FockVector::deserialize(deserializer).map(|inner| Self { inner })
    }
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self { inner: FockVector::vacuum() }
    }

    /// The variable `x_k`.
    pub fn var(k: u32) -> Self {
        Self::monomial(MultiIndex::unit(k), Scalar::from_int(1))
    }

    pub fn constant(c: Scalar) -> Self {
        Self::monomial(MultiIndex::vacuum(), c)
    }

    pub fn monomial(index: MultiIndex, coeff: Scalar) -> Self {
        Self { inner: FockVector::monomial(index, coeff) }
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, Scalar)>>(terms: I) -> Self {
        Self { inner: FockVector::from_terms(terms) }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.inner.terms()
    }

    pub fn coeff(&self, index: &MultiIndex) -> Scalar {
        self.inner.coeff(index)
    }

    pub fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    pub fn add(&self, other: &Polynomial) -> Self {
        Self { inner: self.inner.add(&other.inner) }
    }

    pub fn mul(&self, other: &Polynomial) -> Self {
        Self { inner: self.inner.mul(&other.inner) }
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self { inner: self.inner.scale(s) }
    }

    pub fn pow(&self, n: u32) -> Self {
        Self { inner: self.inner.pow(n) }
    }

    /// Substitutes `x_k = values[k-1]`.
    pub fn evaluate(&self, values: &[Scalar]) -> Scalar {
        self.terms().map(|(k, c)| c * &k.evaluate(values)).sum()
    }

    pub fn to_text(&self, symbol: &str) -> String {
        render::join_terms(self.terms().map(|(k, c)| (c.clone(), render::monomial_text(symbol, k))), false)
    }

    pub fn to_latex(&self, symbol: &str) -> String {
        render::join_terms(self.terms().map(|(k, c)| (c.clone(), render::monomial_latex(symbol, k))), true)
    }
}
