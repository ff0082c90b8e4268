//! The Bose algebra over a `K`-mode one-particle space.
//!
//! Elements of the algebra are sparse polynomials in the reference modes
//! `e_1..e_K`; the vacuum is the constant monomial. The inner product is
//! antilinear in its first argument and makes reference monomials orthogonal
//! with `⟨e^p, e^p⟩ = p!`. Annihilation by a one-particle vector is the
//! adjoint of multiplication and acts as a derivation.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;
use crate::scalar::Scalar;

/// A vector of the one-particle space in reference coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawVector", into = "RawVector")]
pub struct OneParticleVector {
    modes: u32,
    coords: BTreeMap<u32, Scalar>,
}

#[derive(Serialize, Deserialize)]
struct RawVector {
    modes: u32,
    entries: Vec<(u32, Scalar)>,
}

impl TryFrom<RawVector> for OneParticleVector {
    type Error = Error;
    fn try_from(raw: RawVector) -> Result<Self> {
        if raw.modes == 0 {
            return Err(Error::parse("vector with zero modes"));
        }
        Self::from_entries(raw.modes, raw.entries)
    }
}

impl From<OneParticleVector> for RawVector {
    fn from(v: OneParticleVector) -> Self {
        RawVector {
            modes: v.modes,
            entries: v.coords.into_iter().collect(),
        }
    }
}

impl OneParticleVector {
    pub fn zero(modes: u32) -> Self {
        Self { modes, coords: BTreeMap::new() }
    }

    /// The reference basis vector `e_mode`.
    pub fn basis(modes: u32, mode: u32) -> Self {
        assert!((1..=modes).contains(&mode), "mode {mode} outside 1..={modes}");
        let mut coords = BTreeMap::new();
        coords.insert(mode, Scalar::one());
        Self { modes, coords }
    }

    /// Builds from sparse `(mode, value)` pairs, rejecting out-of-range modes.
    /// Repeated modes are summed.
    pub fn from_entries<I: IntoIterator<Item = (u32, Scalar)>>(modes: u32, entries: I) -> Result<Self> {
        let mut coords: BTreeMap<u32, Scalar> = BTreeMap::new();
        for (mode, value) in entries {
            if mode == 0 || mode > modes {
                return Err(Error::ModeOutOfRange { mode, modes });
            }
            *coords.entry(mode).or_insert_with(Scalar::zero) += value;
        }
        coords.retain(|_, v| !v.is_zero());
        Ok(Self { modes, coords })
    }

    /// Dense coordinates; index `i` is mode `i + 1`.
    pub fn from_dense(coords: Vec<Scalar>) -> Self {
        let modes = coords.len() as u32;
        Self::from_entries(modes, coords.into_iter().enumerate().map(|(i, c)| (i as u32 + 1, c)))
            .expect("dense coordinates are always in range")
    }

    pub fn modes(&self) -> u32 {
        self.modes
    }

    pub fn coord(&self, mode: u32) -> Scalar {
        self.coords.get(&mode).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn dense(&self) -> Vec<Scalar> {
        (1..=self.modes).map(|m| self.coord(m)).collect()
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Scalar)> {
        self.coords.iter().map(|(&m, s)| (m, s))
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    /// `⟨self, other⟩ = Σ_k conj(self_k)·other_k`.
    pub fn inner(&self, other: &OneParticleVector) -> Scalar {
        self.coords
            .iter()
            .filter_map(|(m, a)| other.coords.get(m).map(|b| &a.conj() * b))
            .sum()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_entries(self.modes, self.coords.iter().map(|(&m, c)| (m, c * s))).unwrap()
    }

    pub fn add(&self, other: &OneParticleVector) -> Self {
        let modes = self.modes.max(other.modes);
        Self::from_entries(modes, self.iter().chain(other.iter()).map(|(m, c)| (m, c.clone()))).unwrap()
    }

    /// Embeds as a degree-one element of the algebra.
    pub fn to_fock(&self) -> FockVector {
        FockVector::from_terms(self.coords.iter().map(|(&m, c)| (MultiIndex::unit(m), c.clone())))
    }

    /// Fails with the offending mode if any stored mode exceeds `modes`.
    pub fn check_modes(&self, modes: u32) -> Result<()> {
        match self.coords.keys().find(|&&m| m > modes) {
            Some(&mode) => Err(Error::ModeOutOfRange { mode, modes }),
            None => Ok(()),
        }
    }
}

/// A finite linear combination of reference monomials.
///
/// Serializes as a term list `[{"monomial": {"1": 2}, "coeff": "1/2"}, ...]`
/// in monomial order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Vec<RawTerm>", into = "Vec<RawTerm>")]
pub struct FockVector {
    terms: BTreeMap<MultiIndex, Scalar>,
}

#[derive(Serialize, Deserialize)]
struct RawTerm {
    monomial: MultiIndex,
    coeff: Scalar,
}

impl From<Vec<RawTerm>> for FockVector {
    fn from(raw: Vec<RawTerm>) -> Self {
        Self::from_terms(raw.into_iter().map(|t| (t.monomial, t.coeff)))
    }
}

impl From<FockVector> for Vec<RawTerm> {
    fn from(v: FockVector) -> Self {
        v.terms.into_iter().map(|(monomial, coeff)| RawTerm { monomial, coeff }).collect()
    }
}

impl FockVector {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The vacuum `φ`.
    pub fn vacuum() -> Self {
        Self::monomial(MultiIndex::vacuum(), Scalar::one())
    }

    pub fn monomial(index: MultiIndex, coeff: Scalar) -> Self {
        let mut v = Self::zero();
        v.add_term(index, coeff);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, Scalar)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn add_term(&mut self, index: MultiIndex, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(index) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: &MultiIndex) -> Scalar {
        self.terms.get(index).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Largest stored degree; `0` for the zero vector and the vacuum.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(MultiIndex::degree).max().unwrap_or(0)
    }

    pub fn max_mode(&self) -> u32 {
        self.terms.keys().map(MultiIndex::max_mode).max().unwrap_or(0)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(k, c)| (k.clone(), c * s)))
    }

    pub fn add(&self, other: &FockVector) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &FockVector) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c);
        }
        out
    }

    /// Keeps only monomials of degree `<= max_degree`.
    pub fn truncate(&self, max_degree: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.degree() <= max_degree)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// The homogeneous component of the given degree.
    pub fn component(&self, degree: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.degree() == degree)
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Commutative algebra product: exponent maps add on monomials.
    pub fn mul(&self, other: &FockVector) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                out.add_term(ka.add(kb), ca * cb);
            }
        }
        out
    }

    /// Product, dropping every monomial above `max_degree`.
    pub fn mul_truncated(&self, other: &FockVector, max_degree: u32) -> Self {
        let mut out = Self::zero();
        for (ka, ca) in &self.terms {
            let da = ka.degree();
            for (kb, cb) in &other.terms {
                if da + kb.degree() <= max_degree {
                    out.add_term(ka.add(kb), ca * cb);
                }
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> Self {
        (0..n).fold(Self::vacuum(), |acc, _| acc.mul(self))
    }
}

/// Commutative product of the algebra.
pub fn fock_mul(a: &FockVector, b: &FockVector) -> FockVector {
    a.mul(b)
}

/// `⟨a, b⟩`, antilinear in `a`; `⟨e^p, e^q⟩ = δ_{pq}·p!`.
pub fn inner(a: &FockVector, b: &FockVector) -> Scalar {
    let (small, large, flip) = if a.len() <= b.len() { (a, b, false) } else { (b, a, true) };
    let mut acc = Scalar::zero();
    for (k, c) in &small.terms {
        if let Some(d) = large.terms.get(k) {
            let (ca, cb) = if flip { (d, c) } else { (c, d) };
            acc += &(&(&ca.conj() * cb) * &k.factorial());
        }
    }
    acc
}

/// Creation: multiplication by the one-particle vector `x`.
pub fn create(x: &OneParticleVector, a: &FockVector) -> FockVector {
    x.to_fock().mul(a)
}

/// Annihilation `x*`, the adjoint of multiplication by `x`.
///
/// On a monomial, `x* e^p = Σ_k conj(x_k)·p_k·e^{p - δ_k}`; the vacuum is
/// killed.
pub fn annihilate(x: &OneParticleVector, a: &FockVector) -> FockVector {
    let mut out = FockVector::zero();
    for (k, c) in &a.terms {
        for (mode, xk) in x.iter() {
            if let Some(lowered) = k.lower(mode) {
                let mult = Scalar::from_int(k.get(mode) as i64);
                out.add_term(lowered, &(&xk.conj() * c) * &mult);
            }
        }
    }
    out
}

/// Applies `x*` repeatedly, `n` times.
pub fn annihilate_n(x: &OneParticleVector, n: u32, a: &FockVector) -> FockVector {
    let mut out = a.clone();
    for _ in 0..n {
        if out.is_zero() {
            break;
        }
        out = annihilate(x, &out);
    }
    out
}

/// The truncated coherent vector `Σ_{n=0}^{D} uⁿ/n!`.
pub fn coherent(u: &OneParticleVector, max_degree: u32) -> FockVector {
    let x = u.to_fock();
    let mut term = FockVector::vacuum();
    let mut out = term.clone();
    for n in 1..=max_degree {
        term = term.mul(&x).scale(&Scalar::ratio(1, n as i64));
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    out
}

/// Applies `(xⁿ)*` to `coherent(w, D)`.
///
/// The result equals `⟨x,w⟩ⁿ·coherent(w, D-n)`; for `D < n` every degree
/// is annihilated and the zero vector comes back.
pub fn power_annihilate_coherent(x: &OneParticleVector, n: u32, w: &OneParticleVector, max_degree: u32) -> FockVector {
    if max_degree < n {
        return FockVector::zero();
    }
    annihilate_n(x, n, &coherent(w, max_degree))
}

/// `e^{a(w)} a = Σ_{i=0}^{deg a} (w*)^i a / i!`, exact since `(w*)^i` kills
/// everything of degree below `i`.
pub fn exp_annihilate(w: &OneParticleVector, a: &FockVector) -> FockVector {
    let mut out = a.clone();
    let mut term = a.clone();
    for i in 1..=a.degree() {
        term = annihilate(w, &term).scale(&Scalar::ratio(1, i as i64));
        if term.is_zero() {
            break;
        }
        out = out.add(&term);
    }
    out
}

/// Checks `⟨e^u, fg⟩ = ⟨e^u, f⟩⟨e^u, g⟩` with `e^u` truncated at `D`.
///
/// Requires `deg f + deg g <= D`; beyond that the truncation breaks the
/// identity and the call is rejected.
pub fn check_multiplicability(u: &OneParticleVector, f: &FockVector, g: &FockVector, max_degree: u32) -> Result<bool> {
    if f.degree() + g.degree() > max_degree {
        return Err(Error::Precondition(format!(
            "deg f + deg g = {} exceeds degree cutoff {}",
            f.degree() + g.degree(),
            max_degree
        )));
    }
    let e = coherent(u, max_degree);
    let lhs = inner(&e, &f.mul(g));
    let rhs = &inner(&e, f) * &inner(&e, g);
    Ok(lhs == rhs)
}

/// The two orthonormal systems `{f_n}` and `{g_n}` as rows over the
/// reference basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisConfig {
    modes: u32,
    f: Vec<Vec<Scalar>>,
    g: Vec<Vec<Scalar>>,
}

#[derive(Deserialize)]
struct RawBasis {
    modes: u32,
    #[serde(default)]
    f: Option<Vec<Vec<Scalar>>>,
    #[serde(default)]
    g: Option<Vec<Vec<Scalar>>>,
}

impl<'de> Deserialize<'de> for BasisConfig {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let raw = RawBasis::deserialize(deserializer)?;
        let id = || identity_rows(raw.modes);
        BasisConfig::new(raw.modes, raw.f.clone().unwrap_or_else(id), raw.g.clone().unwrap_or_else(id))
            .map_err(serde::de::Error::custom)
    }
}

fn identity_rows(modes: u32) -> Vec<Vec<Scalar>> {
    (0..modes)
        .map(|i| (0..modes).map(|j| if i == j { Scalar::one() } else { Scalar::zero() }).collect())
        .collect()
}

fn check_orthonormal(system: char, modes: u32, rows: &[Vec<Scalar>]) -> Result<()> {
    if rows.len() != modes as usize || rows.iter().any(|r| r.len() != modes as usize) {
        let cols = rows.iter().map(Vec::len).find(|&l| l != modes as usize).unwrap_or(modes as usize);
        return Err(Error::BadShape { system, rows: rows.len(), cols, modes });
    }
    for (a, ra) in rows.iter().enumerate() {
        for (b, rb) in rows.iter().enumerate() {
            let dot: Scalar = ra.iter().zip(rb).map(|(x, y)| x * &y.conj()).sum();
            let expected = if a == b { Scalar::one() } else { Scalar::zero() };
            if dot != expected {
                return Err(Error::NotOrthonormal { system, row: a + 1 });
            }
        }
    }
    Ok(())
}

impl BasisConfig {
    /// Validates both systems: `F·F^† = I` and `G·G^† = I` exactly.
    pub fn new(modes: u32, f: Vec<Vec<Scalar>>, g: Vec<Vec<Scalar>>) -> Result<Self> {
        if modes == 0 {
            return Err(Error::InvalidCutoffs("basis needs at least one mode".into()));
        }
        check_orthonormal('f', modes, &f)?;
        check_orthonormal('g', modes, &g)?;
        Ok(Self { modes, f, g })
    }

    /// `f_n = g_n = e_n`.
    pub fn identity(modes: u32) -> Self {
        Self::new(modes, identity_rows(modes), identity_rows(modes)).expect("identity is orthonormal")
    }

    pub fn modes(&self) -> u32 {
        self.modes
    }

    /// `f_n` for `n` in `1..=K`.
    pub fn f(&self, n: u32) -> OneParticleVector {
        OneParticleVector::from_dense(self.f[n as usize - 1].clone())
    }

    /// `g_n` for `n` in `1..=K`.
    pub fn g(&self, n: u32) -> OneParticleVector {
        OneParticleVector::from_dense(self.g[n as usize - 1].clone())
    }
}
