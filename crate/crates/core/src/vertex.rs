//! Laurent expansion of the vertex operator
//! `V(z) = exp(Σ zⁿ f_n) exp(Σ z⁻ⁿ g_n*)` into operator coefficients `S_w`.
//!
//! `S_w` is the sum over pairs `(p, q)` of net weight `w` of
//! `(Π f_k^{p_k}) (Π g_k^{q_k})* / (p! q!)`. Everything here works at finite
//! cutoffs: `K` modes, expansion order `M`, degree `D`.
//!
//! Matrix elements are computed two ways. The closed form expands
//! `exp(P(z))` with
//!
//! ```text
//! P(z) = Σ_{n≤K} ⟨u, f_n⟩ zⁿ + ⟨g_n, v⟩ z⁻ⁿ
//! ```
//!
//! and the expansion route sums pair contributions directly. The pairings
//! are the ones produced by the operators themselves under an inner product
//! that is antilinear in its first slot: `(f^p)* e^u` pulls out
//! `⟨f, u⟩^p`, which conjugates to `⟨u, f⟩^p` on the bra side, and
//! `(g^q)* e^v` pulls out `⟨g, v⟩^q`.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::combinatorics::{enumerate_pq, enumerate_weight, Cutoffs, TuplePair};
use crate::fock::{annihilate, inner, BasisConfig, FockVector, OneParticleVector};
use crate::laurent::{LaurentPoly, LaurentSlice};
use crate::multi_index::MultiIndex;
use crate::poly::Polynomial;
use crate::render;
use crate::scalar::Scalar;

/// One summand `coeff · (Π f^p)(Π g^q)*` with `coeff = 1/(p! q!)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurTerm {
    pub p: MultiIndex,
    pub q: MultiIndex,
    pub coeff: Scalar,
}

impl SchurTerm {
    pub fn from_pair(pair: TuplePair) -> Self {
        let denom = &pair.p.factorial() * &pair.q.factorial();
        let coeff = denom.inv().expect("factorials are nonzero");
        Self { p: pair.p, q: pair.q, coeff }
    }

    /// Net change in particle number, `deg p - deg q`.
    pub fn degree_shift(&self) -> i64 {
        self.p.degree() as i64 - self.q.degree() as i64
    }

    fn body(&self, latex: bool) -> String {
        let (create, annih) = if latex {
            (render::monomial_latex("f", &self.p), render::monomial_latex("g", &self.q))
        } else {
            (render::monomial_text("f", &self.p), render::monomial_text("g", &self.q))
        };
        let mut parts = Vec::new();
        if !create.is_empty() {
            parts.push(create);
        }
        if !annih.is_empty() {
            parts.push(if latex { format!("\\left({annih}\\right)^{{*}}") } else { format!("({annih})*") });
        }
        parts.join(" ")
    }
}

/// The truncation of `S_w` at given cutoffs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SchurOperator {
    pub w: i64,
    pub cutoffs: Cutoffs,
    pub terms: Vec<SchurTerm>,
}

impl SchurOperator {
    pub fn to_text(&self) -> String {
        render::join_terms(self.terms.iter().map(|t| (t.coeff.clone(), t.body(false))), false)
    }

    pub fn to_latex(&self) -> String {
        let body = render::join_terms(self.terms.iter().map(|t| (t.coeff.clone(), t.body(true))), true);
        format!("\\mathcal{{S}}_{{{}}} = {body}", self.w)
    }
}

/// Collects the pairs of cells `(m, w)` for `m = 0..=M` into `S_w`, ordered
/// by `m` and then by enumeration order.
pub fn schur_terms(w: i64, cutoffs: &Cutoffs) -> SchurOperator {
    let terms = (0..=cutoffs.order)
        .flat_map(|m| enumerate_pq(m, w, cutoffs.modes))
        .map(SchurTerm::from_pair)
        .collect();
    SchurOperator { w, cutoffs: *cutoffs, terms }
}

/// `Π_k (g_k*)^{q_k} v`.
fn annihilate_monomial(q: &MultiIndex, v: &FockVector, config: &BasisConfig) -> FockVector {
    let mut out = v.clone();
    for (mode, exp) in q.iter() {
        let g = config.g(mode);
        for _ in 0..exp {
            if out.is_zero() {
                return out;
            }
            out = annihilate(&g, &out);
        }
    }
    out
}

/// `Π_k f_k^{p_k}` as an element of the algebra.
fn creation_monomial(p: &MultiIndex, config: &BasisConfig) -> FockVector {
    let mut out = FockVector::vacuum();
    for (mode, exp) in p.iter() {
        let f = config.f(mode).to_fock();
        for _ in 0..exp {
            out = out.mul(&f);
        }
    }
    out
}

/// Applies a truncated `S_w` to `v`: annihilators first, then the creation
/// monomial, dropping every monomial above `max_degree`.
pub fn apply_schur(op: &SchurOperator, v: &FockVector, config: &BasisConfig, max_degree: u32) -> FockVector {
    let mut lowered: HashMap<&MultiIndex, FockVector> = HashMap::new();
    let mut raised: HashMap<&MultiIndex, FockVector> = HashMap::new();
    let mut out = FockVector::zero();
    for term in &op.terms {
        if term.p.degree() > max_degree {
            continue;
        }
        let a = lowered
            .entry(&term.q)
            .or_insert_with(|| annihilate_monomial(&term.q, v, config));
        if a.is_zero() {
            continue;
        }
        let c = raised.entry(&term.p).or_insert_with(|| creation_monomial(&term.p, config));
        out = out.add(&c.mul_truncated(a, max_degree).scale(&term.coeff));
    }
    out
}

/// `⟨u, f_n⟩` for `n = 1..=K`.
pub fn creation_pairings(u: &OneParticleVector, config: &BasisConfig) -> Vec<Scalar> {
    (1..=config.modes()).map(|n| u.inner(&config.f(n))).collect()
}

/// `⟨g_n, v⟩` for `n = 1..=K`.
pub fn annihilation_pairings(v: &OneParticleVector, config: &BasisConfig) -> Vec<Scalar> {
    (1..=config.modes()).map(|n| config.g(n).inner(v)).collect()
}

/// `P(z) = Σ_{n≤K} ⟨u, f_n⟩ zⁿ + ⟨g_n, v⟩ z⁻ⁿ`.
pub fn generating_polynomial(u: &OneParticleVector, v: &OneParticleVector, config: &BasisConfig) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (n, a) in creation_pairings(u, config).into_iter().enumerate() {
        p.add_term(n as i64 + 1, a);
    }
    for (n, b) in annihilation_pairings(v, config).into_iter().enumerate() {
        p.add_term(-(n as i64 + 1), b);
    }
    p
}

/// `E_M(x) = Σ_{i=0}^{M} xⁱ/i!`, the order-`M` partial sum of `eˣ`.
pub fn partial_exp(x: &Scalar, order: u32) -> Scalar {
    let mut term = Scalar::one();
    let mut acc = Scalar::one();
    for i in 1..=order {
        term = &(&term * x) * &Scalar::ratio(1, i as i64);
        acc += &term;
    }
    acc
}

/// `Σ_{m=0}^{M} P(z)^m / m!` without the `e^{⟨u,v⟩}` prefactor.
pub fn vertex_series(u: &OneParticleVector, v: &OneParticleVector, config: &BasisConfig, order: u32) -> LaurentPoly {
    let p = generating_polynomial(u, v, config);
    let mut power = LaurentPoly::one();
    let mut acc = LaurentPoly::one();
    for m in 1..=order {
        power = power.mul(&p).scale(&Scalar::ratio(1, m as i64));
        acc = acc.add(&power);
    }
    acc
}

/// Closed-form `⟨e^u, V(z) e^v⟩` at cutoffs: the truncated exponential of
/// `P(z)`, every coefficient scaled by the partial sum `E_M(⟨u, v⟩)` that
/// stands in for `e^{⟨u, v⟩}`.
pub fn matrix_element_closed(
    u: &OneParticleVector,
    v: &OneParticleVector,
    config: &BasisConfig,
    cutoffs: &Cutoffs,
) -> LaurentSlice {
    let prefactor = partial_exp(&u.inner(v), cutoffs.order);
    LaurentSlice {
        coeffs: vertex_series(u, v, config, cutoffs.order).scale(&prefactor),
        cutoffs: *cutoffs,
    }
}

/// Contribution of every pair in cell `(m, w)`, bucketed by `(deg p, deg q)`.
pub fn matrix_element_expansion_by_degree(
    u: &OneParticleVector,
    v: &OneParticleVector,
    w: i64,
    m: u32,
    config: &BasisConfig,
) -> BTreeMap<(u32, u32), Scalar> {
    let alpha = creation_pairings(u, config);
    let beta = annihilation_pairings(v, config);
    let mut out: BTreeMap<(u32, u32), Scalar> = BTreeMap::new();
    for pair in enumerate_pq(m, w, config.modes()) {
        let value = &(&pair.p.evaluate(&alpha) * &pair.q.evaluate(&beta))
            / &(&pair.p.factorial() * &pair.q.factorial());
        if value.is_zero() {
            continue;
        }
        *out.entry((pair.p.degree(), pair.q.degree())).or_insert_with(Scalar::zero) += &value;
    }
    out
}

/// `Σ_{(p,q) in cell (m,w)} Π ⟨u,f_k⟩^{p_k} ⟨g_k,v⟩^{q_k} / (p! q!)`, without
/// the `e^{⟨u,v⟩}` prefactor.
pub fn matrix_element_expansion(
    u: &OneParticleVector,
    v: &OneParticleVector,
    w: i64,
    m: u32,
    config: &BasisConfig,
) -> Scalar {
    matrix_element_expansion_by_degree(u, v, w, m, config).into_values().sum()
}

/// Checks that the `zʷ` coefficient of `P(z)^m / m!` equals
/// `matrix_element_expansion(u, v, w, m)` for every `|w| <= K·m`.
pub fn verify_lemma_term(u: &OneParticleVector, v: &OneParticleVector, m: u32, config: &BasisConfig) -> bool {
    let p = generating_polynomial(u, v, config);
    let lhs = p.pow(m).scale(&Scalar::inv_factorial(m));
    let bound = config.modes() as i64 * m as i64;
    if let Some((lo, hi)) = lhs.support() {
        if lo < -bound || hi > bound {
            return false;
        }
    }
    (-bound..=bound).all(|w| lhs.coeff(w) == matrix_element_expansion(u, v, w, m, config))
}

/// The expansion-route value of `⟨e^u_D, S_w e^v_D⟩`, with both coherent
/// vectors truncated at `D`.
///
/// A pair with `deg p = a`, `deg q = b` contributes its expansion value times
/// `⟨e^u_{D-a}, e^v_{D-b}⟩ = E_{D-max(a,b)}(⟨u,v⟩)`, and nothing when `a` or
/// `b` exceeds `D`. This is the order-matched replacement for the
/// `e^{⟨u,v⟩}` prefactor, so the result is an exact finite identity partner
/// for the operator route.
pub fn truncated_expansion_element(
    u: &OneParticleVector,
    v: &OneParticleVector,
    w: i64,
    config: &BasisConfig,
    cutoffs: &Cutoffs,
) -> Scalar {
    let contraction = u.inner(v);
    let d = cutoffs.degree;
    let mut acc = Scalar::zero();
    for m in 0..=cutoffs.order {
        for ((a, b), value) in matrix_element_expansion_by_degree(u, v, w, m, config) {
            if a > d || b > d {
                continue;
            }
            acc += &(&value * &partial_exp(&contraction, d - a.max(b)));
        }
    }
    acc
}

/// Classical `S_m(x) = Σ_{weight p = m} x^p / p!`, the `z^m` coefficient of
/// `exp(Σ_{k≤K} x_k z^k)`.
pub fn elementary_schur(m: u32, modes: u32) -> Polynomial {
    Polynomial::from_terms(enumerate_weight(m, modes).into_iter().map(|p| {
        let c = p.factorial().inv().expect("factorials are nonzero");
        (p, c)
    }))
}

// Polynomials in formal t, s with Laurent coefficients in z, truncated at
// t-degree `tmax` and s-degree `smax`.
#[derive(Clone, Default)]
struct TsSeries {
    coeffs: BTreeMap<(u32, u32, i64), Scalar>,
    tmax: u32,
    smax: u32,
}

impl TsSeries {
    fn new(tmax: u32, smax: u32) -> Self {
        Self { coeffs: BTreeMap::new(), tmax, smax }
    }

    fn add_term(&mut self, t: u32, s: u32, z: i64, c: Scalar) {
        if t > self.tmax || s > self.smax || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry((t, s, z)).or_insert_with(Scalar::zero);
        *slot += &c;
        if slot.is_zero() {
            self.coeffs.remove(&(t, s, z));
        }
    }

    fn one(tmax: u32, smax: u32) -> Self {
        let mut out = Self::new(tmax, smax);
        out.add_term(0, 0, 0, Scalar::one());
        out
    }

    fn mul(&self, other: &TsSeries) -> Self {
        let mut out = Self::new(self.tmax, self.smax);
        for (&(t1, s1, z1), c1) in &self.coeffs {
            for (&(t2, s2, z2), c2) in &other.coeffs {
                out.add_term(t1 + t2, s1 + s2, z1 + z2, c1 * c2);
            }
        }
        out
    }

    fn scale(&self, x: &Scalar) -> Self {
        let mut out = Self::new(self.tmax, self.smax);
        for (&(t, s, z), c) in &self.coeffs {
            out.add_term(t, s, z, c * x);
        }
        out
    }

    fn add(&self, other: &TsSeries) -> Self {
        let mut out = self.clone();
        for (&(t, s, z), c) in &other.coeffs {
            out.add_term(t, s, z, c.clone());
        }
        out
    }

    fn coeff(&self, t: u32, s: u32, z: i64) -> Scalar {
        self.coeffs.get(&(t, s, z)).cloned().unwrap_or_else(Scalar::zero)
    }
}

/// `⟨u^k, S_w v^j⟩` read off the closed form for the coherent pair
/// `(t·u, s·v)`.
///
/// With `t`, `s` formal real variables the closed form is
/// `E_M(ts⟨u,v⟩) · Σ_{m≤M} (t·α(z) + s·β(z))^m / m!`; the answer is `k! j!`
/// times its `t^k s^j z^w` coefficient, extracted exactly. It agrees with the
/// operator route once `M >= k + j`.
pub fn power_matrix_element(
    u: &OneParticleVector,
    k: u32,
    v: &OneParticleVector,
    j: u32,
    w: i64,
    config: &BasisConfig,
    cutoffs: &Cutoffs,
) -> Scalar {
    let mut p = TsSeries::new(k, j);
    for (n, a) in creation_pairings(u, config).into_iter().enumerate() {
        p.add_term(1, 0, n as i64 + 1, a);
    }
    for (n, b) in annihilation_pairings(v, config).into_iter().enumerate() {
        p.add_term(0, 1, -(n as i64 + 1), b);
    }

    let mut series = TsSeries::one(k, j);
    let mut power = TsSeries::one(k, j);
    for m in 1..=cutoffs.order.min(k + j) {
        power = power.mul(&p).scale(&Scalar::ratio(1, m as i64));
        series = series.add(&power);
    }

    let contraction = u.inner(v);
    let mut prefactor = TsSeries::new(k, j);
    for i in 0..=cutoffs.order.min(k.min(j)) {
        prefactor.add_term(i, i, 0, &contraction.pow(i) * &Scalar::inv_factorial(i));
    }

    let full = series.mul(&prefactor);
    &full.coeff(k, j, w) * &(&Scalar::factorial(k) * &Scalar::factorial(j))
}

/// The operator-route partner of `power_matrix_element`:
/// `⟨u^k, S_w v^j⟩` with `S_w` truncated at `cutoffs` and the output of
/// `S_w` cut at degree `max(k, j, D)`.
pub fn power_matrix_element_operator(
    u: &OneParticleVector,
    k: u32,
    v: &OneParticleVector,
    j: u32,
    w: i64,
    config: &BasisConfig,
    cutoffs: &Cutoffs,
) -> Scalar {
    let bra = u.to_fock().pow(k);
    let ket = v.to_fock().pow(j);
    let degree = cutoffs.degree.max(k).max(j);
    inner(&bra, &apply_schur(&schur_terms(w, cutoffs), &ket, config, degree))
}
