//! Finitely supported exponent maps `mode -> exponent`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::scalar::Scalar;

/// A monomial `Π_k x_k^{p_k}` stored as its exponent map.
///
/// Modes are `>= 1`, stored exponents are `>= 1`; the vacuum is the empty map.
/// Ordering is lexicographic over `(mode, exponent)` entries in increasing
/// mode order, which is the order used by every enumerator in this crate.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "BTreeMap<u32, u32>", into = "BTreeMap<u32, u32>")]
pub struct MultiIndex {
    entries: BTreeMap<u32, u32>,
}

impl MultiIndex {
    pub fn vacuum() -> Self {
        Self::default()
    }

    /// `x_mode^1`.
    pub fn unit(mode: u32) -> Self {
        assert!(mode >= 1, "modes start at 1");
        let mut entries = BTreeMap::new();
        entries.insert(mode, 1);
        Self { entries }
    }

    /// Builds from `(mode, exponent)` pairs, summing repeats and dropping
    /// zero exponents. Panics on mode 0.
    pub fn from_pairs<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut entries = BTreeMap::new();
        for (mode, exp) in pairs {
            assert!(mode >= 1, "modes start at 1");
            if exp > 0 {
                *entries.entry(mode).or_insert(0) += exp;
            }
        }
        Self { entries }
    }

    /// Builds from a dense exponent slice where index `i` is mode `i + 1`.
    pub fn from_dense(exps: &[u32]) -> Self {
        Self::from_pairs(exps.iter().enumerate().map(|(i, &e)| (i as u32 + 1, e)))
    }

    pub fn is_vacuum(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, mode: u32) -> u32 {
        self.entries.get(&mode).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.entries.iter().map(|(&m, &e)| (m, e))
    }

    /// `Σ_k p_k`.
    pub fn degree(&self) -> u32 {
        self.entries.values().sum()
    }

    /// `Σ_k k·p_k`.
    pub fn weight(&self) -> u64 {
        self.entries.iter().map(|(&m, &e)| m as u64 * e as u64).sum()
    }

    pub fn max_mode(&self) -> u32 {
        self.entries.keys().next_back().copied().unwrap_or(0)
    }

    pub fn within_modes(&self, modes: u32) -> bool {
        self.max_mode() <= modes
    }

    /// `Π_k p_k!`, an exact integer.
    pub fn factorial(&self) -> Scalar {
        self.entries
            .values()
            .map(|&e| Scalar::factorial(e))
            .product()
    }

    /// Exponent-wise sum (monomial product).
    pub fn add(&self, other: &MultiIndex) -> MultiIndex {
        let mut entries = self.entries.clone();
        for (&m, &e) in &other.entries {
            *entries.entry(m).or_insert(0) += e;
        }
        MultiIndex { entries }
    }

    /// Lowers the exponent of `mode` by one; `None` when it is already zero.
    pub fn lower(&self, mode: u32) -> Option<MultiIndex> {
        let e = self.get(mode);
        if e == 0 {
            return None;
        }
        let mut entries = self.entries.clone();
        if e == 1 {
            entries.remove(&mode);
        } else {
            entries.insert(mode, e - 1);
        }
        Some(MultiIndex { entries })
    }

    /// `Π_k values[k-1]^{p_k}`; modes beyond `values.len()` contribute zero.
    pub fn evaluate(&self, values: &[Scalar]) -> Scalar {
        let mut acc = Scalar::from_int(1);
        for (m, e) in self.iter() {
            match values.get(m as usize - 1) {
                Some(v) => acc = &acc * &v.pow(e),
                None => return Scalar::from_int(0),
            }
        }
        acc
    }
}

impl TryFrom<BTreeMap<u32, u32>> for MultiIndex {
    type Error = Error;

    fn try_from(map: BTreeMap<u32, u32>) -> Result<Self, Error> {
        if map.contains_key(&0) {
            return Err(Error::parse("multi-index mode 0 (modes start at 1)"));
        }
        Ok(Self {
            entries: map.into_iter().filter(|&(_, e)| e > 0).collect(),
        })
    }
}

impl From<MultiIndex> for BTreeMap<u32, u32> {
    fn from(mi: MultiIndex) -> Self {
        mi.entries
    }
}
