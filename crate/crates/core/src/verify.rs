//! Seeded randomized checks of every exact identity the crate implements.
//!
//! Inputs are Gaussian rationals whose real and imaginary parts have
//! numerators in `-9..=9` and denominators in `1..=9`, drawn from a ChaCha8
//! stream seeded with the user seed. The same seed always yields the same
//! inputs and therefore the same report.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::Cutoffs;
use crate::error::{Error, Result};
use crate::fock::{
    annihilate, check_multiplicability, coherent, create, exp_annihilate, inner, power_annihilate_coherent,
    BasisConfig, FockVector, OneParticleVector,
};
use crate::multi_index::MultiIndex;
use crate::scalar::Scalar;
use crate::vertex::{
    apply_schur, partial_exp, power_matrix_element, power_matrix_element_operator, schur_terms,
    truncated_expansion_element, verify_lemma_term,
};

/// Deterministic generator of random exact inputs.
pub struct InputGen {
    rng: ChaCha8Rng,
}

impl InputGen {
    pub fn new(seed: u64) -> Self {
        Self { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rational_parts(&mut self) -> (i64, i64) {
        (self.rng.gen_range(-9..=9), self.rng.gen_range(1..=9))
    }

    pub fn real(&mut self) -> Scalar {
        let (n, d) = self.rational_parts();
        Scalar::ratio(n, d)
    }

    pub fn scalar(&mut self) -> Scalar {
        let (a, b) = self.rational_parts();
        let (c, d) = self.rational_parts();
        Scalar::gaussian(a, b, c, d)
    }

    pub fn vector(&mut self, modes: u32) -> OneParticleVector {
        OneParticleVector::from_dense((0..modes).map(|_| self.scalar()).collect())
    }

    pub fn monomial(&mut self, modes: u32, max_degree: u32) -> MultiIndex {
        let degree = self.rng.gen_range(0..=max_degree);
        MultiIndex::from_pairs((0..degree).map(|_| (self.rng.gen_range(1..=modes), 1)))
    }

    /// A sparse element with up to `max_terms` monomials of degree `<= max_degree`.
    pub fn fock(&mut self, modes: u32, max_degree: u32, max_terms: usize) -> FockVector {
        let n = self.rng.gen_range(1..=max_terms);
        let mut out = FockVector::zero();
        for _ in 0..n {
            let k = self.monomial(modes, max_degree);
            out.add_term(k, self.scalar());
        }
        out
    }

    pub fn below(&mut self, bound: u32) -> u32 {
        self.rng.gen_range(0..=bound)
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckReport {
    pub name: &'static str,
    pub passed: bool,
    pub cases: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct VerifyReport {
    pub seed: u64,
    pub trials: u32,
    pub cutoffs: Cutoffs,
    pub checks: Vec<CheckReport>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!(
            "verify seed={} trials={} K={} D={} M={}\n",
            self.seed, self.trials, self.cutoffs.modes, self.cutoffs.degree, self.cutoffs.order
        );
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {:<22} {} cases\n", c.name, c.cases));
            if let Some(ce) = &c.counterexample {
                out.push_str(&format!("     counterexample: {ce}\n"));
            }
        }
        out.push_str(if self.passed() { "all identities hold\n" } else { "identity failure\n" });
        out
    }
}

struct Check {
    name: &'static str,
    cases: u64,
    counterexample: Option<Value>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, counterexample: None }
    }

    fn record(&mut self, ok: bool, payload: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok && self.counterexample.is_none() {
            self.counterexample = Some(payload());
        }
    }

    fn finish(self) -> CheckReport {
        CheckReport {
            name: self.name,
            passed: self.counterexample.is_none(),
            cases: self.cases,
            counterexample: self.counterexample,
        }
    }
}

/// Highest power used by the power-inner-product check.
pub const MAX_POWER: u32 = 5;

/// Runs the full suite for `trials` random inputs.
///
/// Every check is an exact identity at the given cutoffs, so any failure
/// points at an implementation bug.
pub fn run_suite(seed: u64, trials: u32, cutoffs: &Cutoffs, config: &BasisConfig) -> Result<VerifyReport> {
    cutoffs.validate()?;
    if trials == 0 {
        return Err(Error::Precondition("trials must be at least 1".into()));
    }
    if config.modes() != cutoffs.modes {
        return Err(Error::InvalidCutoffs(format!(
            "basis has {} modes but K = {}",
            config.modes(),
            cutoffs.modes
        )));
    }
    let k = cutoffs.modes;
    let d = cutoffs.degree;
    let m_max = cutoffs.order;
    let mut gen = InputGen::new(seed);

    let mut power_inner = Check::new("power-inner-product");
    let mut power_annih = Check::new("power-annihilation");
    let mut multiplicative = Check::new("multiplicability");
    let mut exp_annih = Check::new("exp-annihilation");
    let mut adjoint = Check::new("adjointness");
    let mut leibniz = Check::new("leibniz");
    let mut lemma = Check::new("lemma-term");
    let mut oracle = Check::new("operator-oracle");
    let mut reduction = Check::new("theorem-reduction");

    for _ in 0..trials {
        let x = gen.vector(k);
        let y = gen.vector(k);
        let xy = x.inner(&y);
        for j in 0..=MAX_POWER {
            let lhs = xy.pow(j);
            let rhs = &inner(&x.to_fock().pow(j), &y.to_fock().pow(j)) * &Scalar::inv_factorial(j);
            power_inner.record(lhs == rhs, || json!({"x": x, "y": y, "j": j}));
        }

        for n in 0..=d {
            let lhs = power_annihilate_coherent(&x, n, &y, d);
            let rhs = coherent(&y, d - n).scale(&xy.pow(n));
            power_annih.record(lhs == rhs, || json!({"x": x, "n": n, "w": y, "D": d}));
        }

        let df = gen.below(d);
        let f = gen.fock(k, df, 3);
        let g = gen.fock(k, d - df, 3);
        let ok = check_multiplicability(&x, &f, &g, d)?;
        multiplicative.record(ok, || json!({"u": x, "f": f, "g": g, "D": d}));

        let a = coherent(&y, d);
        let e = exp_annihilate(&x, &a);
        for j in 0..=d {
            let expect = y.to_fock().pow(j).scale(&(&Scalar::inv_factorial(j) * &partial_exp(&xy, d - j)));
            exp_annih.record(e.component(j) == expect, || json!({"w": x, "v": y, "D": d, "degree": j}));
        }

        let a = gen.fock(k, d, 3);
        let b = gen.fock(k, d, 3);
        for mode in 1..=k {
            let xm = OneParticleVector::basis(k, mode);
            let lhs = inner(&create(&xm, &a), &b);
            let rhs = inner(&a, &annihilate(&xm, &b));
            adjoint.record(lhs == rhs, || json!({"mode": mode, "a": a, "b": b}));
        }
        let lhs = annihilate(&x, &a.mul(&b));
        let rhs = annihilate(&x, &a).mul(&b).add(&a.mul(&annihilate(&x, &b)));
        leibniz.record(lhs == rhs, || json!({"x": x, "a": a, "b": b}));

        let u = gen.vector(k);
        let v = gen.vector(k);
        for m in 0..=m_max {
            lemma.record(verify_lemma_term(&u, &v, m, config), || json!({"u": u, "v": v, "m": m}));
        }

        let eu = coherent(&u, d);
        let ev = coherent(&v, d);
        let bound = cutoffs.weight_bound();
        for w in -bound..=bound {
            let lhs = inner(&eu, &apply_schur(&schur_terms(w, cutoffs), &ev, config, d));
            let rhs = truncated_expansion_element(&u, &v, w, config, cutoffs);
            oracle.record(lhs == rhs, || json!({"u": u, "v": v, "w": w}));
        }

        for kk in 0..=d {
            for jj in 0..=d {
                if kk + jj > m_max {
                    continue;
                }
                let reach = k as i64 * (kk + jj) as i64;
                for w in -reach..=reach {
                    let lhs = power_matrix_element(&u, kk, &v, jj, w, config, cutoffs);
                    let rhs = power_matrix_element_operator(&u, kk, &v, jj, w, config, cutoffs);
                    reduction.record(lhs == rhs, || json!({"u": u, "k": kk, "v": v, "j": jj, "w": w}));
                }
            }
        }
    }

    let checks = [power_inner, power_annih, multiplicative, exp_annih, adjoint, leibniz, lemma, oracle, reduction]
        .into_iter()
        .map(Check::finish)
        .collect();
    Ok(VerifyReport { seed, trials, cutoffs: *cutoffs, checks })
}
