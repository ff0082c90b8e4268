//! Acceptance suite: one line per criterion, non-zero exit if any fails.
//!
//! Every comparison is exact equality over Gaussian rationals; each
//! criterion also has a wall-clock budget.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use vertex_core::verify::InputGen;
use vertex_core::vertex::{annihilation_pairings, creation_pairings, partial_exp};
use vertex_core::{
    apply_schur, check_multiplicability, coherent, count_pq, elementary_schur, enumerate_pq, exp_annihilate, inner,
    matrix_element_expansion, power_annihilate_coherent, power_matrix_element, schur_terms,
    truncated_expansion_element, verify_lemma_term, BasisConfig, Cutoffs, FockVector, LaurentPoly, MultiIndex,
    OneParticleVector, Polynomial, Scalar, TuplePair,
};

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn pass(detail: impl Into<String>) -> Self {
        Self { ok: true, detail: detail.into() }
    }

    fn fail(detail: impl Into<String>) -> Self {
        Self { ok: false, detail: detail.into() }
    }
}

fn power(v: &OneParticleVector, n: u32) -> FockVector {
    v.to_fock().pow(n)
}

// 1. ⟨x,y⟩^j = ⟨x^j, y^j⟩ / j! for 25 pairs, K = 3, j = 0..=5.
fn criterion_power_inner() -> Outcome {
    let mut gen = InputGen::new(101);
    for trial in 0..25 {
        let x = gen.vector(3);
        let y = gen.vector(3);
        for j in 0..=5 {
            let lhs = x.inner(&y).pow(j);
            let rhs = &inner(&power(&x, j), &power(&y, j)) * &Scalar::inv_factorial(j);
            if lhs != rhs {
                return Outcome::fail(format!("trial {trial}, j = {j}"));
            }
        }
    }
    Outcome::pass("25 pairs x 6 powers")
}

// 2. Power annihilation, multiplicability and exponential annihilation,
//    25 inputs each at D = 6, K = 3.
fn criterion_coherent_identities() -> Outcome {
    let d = 6;
    let mut gen = InputGen::new(202);
    for trial in 0..25 {
        let x = gen.vector(3);
        let w = gen.vector(3);
        for n in 0..=d {
            let lhs = power_annihilate_coherent(&x, n, &w, d);
            if lhs != coherent(&w, d - n).scale(&x.inner(&w).pow(n)) {
                return Outcome::fail(format!("power annihilation: trial {trial}, n = {n}"));
            }
        }
    }
    let mut gen = InputGen::new(303);
    for trial in 0..25 {
        let u = gen.vector(3);
        let df = gen.below(d);
        let f = gen.fock(3, df, 4);
        let g = gen.fock(3, d - df, 4);
        match check_multiplicability(&u, &f, &g, d) {
            Ok(true) => {}
            other => return Outcome::fail(format!("multiplicability: trial {trial}: {other:?}")),
        }
    }
    let mut gen = InputGen::new(404);
    for trial in 0..25 {
        let w = gen.vector(3);
        let v = gen.vector(3);
        let out = exp_annihilate(&w, &coherent(&v, d));
        let c = w.inner(&v);
        for j in 0..=d {
            let expect = power(&v, j).scale(&(&Scalar::inv_factorial(j) * &partial_exp(&c, d - j)));
            if out.component(j) != expect {
                return Outcome::fail(format!("exp annihilation: trial {trial}, degree {j}"));
            }
        }
    }
    Outcome::pass("3 x 25 inputs at D = 6, K = 3")
}

/// `P(z)^m` by the multinomial theorem: a sum over compositions `c` of `m`
/// into the `2K` summands with weight `m! / Π c_i!`.
fn multinomial_power(summands: &[(i64, Scalar)], m: u32) -> LaurentPoly {
    fn go(summands: &[(i64, Scalar)], left: u32, power: i64, coeff: Scalar, denom: Scalar, out: &mut LaurentPoly, m: u32) {
        match summands.split_first() {
            None => {
                if left == 0 {
                    out.add_term(power, &(&coeff * &Scalar::factorial(m)) / &denom);
                }
            }
            Some(((z, a), rest)) => {
                for c in 0..=left {
                    go(
                        rest,
                        left - c,
                        power + z * c as i64,
                        &coeff * &a.pow(c),
                        &denom * &Scalar::factorial(c),
                        out,
                        m,
                    );
                }
            }
        }
    }
    let mut out = LaurentPoly::zero();
    go(summands, m, 0, Scalar::from_int(1), Scalar::from_int(1), &mut out, m);
    out
}

// 3. Lemma term by term for m ≤ 6, 10 pairs at K = 3.
fn criterion_lemma() -> Outcome {
    let config = BasisConfig::identity(3);
    let mut gen = InputGen::new(505);
    for trial in 0..10 {
        let u = gen.vector(3);
        let v = gen.vector(3);
        let mut summands: Vec<(i64, Scalar)> = Vec::new();
        for (n, a) in creation_pairings(&u, &config).into_iter().enumerate() {
            summands.push((n as i64 + 1, a));
        }
        for (n, b) in annihilation_pairings(&v, &config).into_iter().enumerate() {
            summands.push((-(n as i64 + 1), b));
        }
        for m in 0..=6u32 {
            let brute = multinomial_power(&summands, m).scale(&Scalar::inv_factorial(m));
            let bound = 3 * m as i64;
            for w in -bound..=bound {
                if brute.coeff(w) != matrix_element_expansion(&u, &v, w, m, &config) {
                    return Outcome::fail(format!("oracle mismatch: trial {trial}, m = {m}, w = {w}"));
                }
            }
            if !verify_lemma_term(&u, &v, m, &config) {
                return Outcome::fail(format!("verify_lemma_term false: trial {trial}, m = {m}"));
            }
        }
    }
    Outcome::pass("10 pairs x m = 0..=6")
}

// 4. Operator route vs expansion route, K = 2, D = 3, M = 6, |w| ≤ 6.
fn criterion_operator_oracle() -> Outcome {
    let config = BasisConfig::identity(2);
    let cut = Cutoffs::new(2, 6, 3).unwrap();
    let ops: Vec<_> = (-6..=6).map(|w| schur_terms(w, &cut)).collect();
    let mut gen = InputGen::new(606);
    for trial in 0..5 {
        let u = gen.vector(2);
        let v = gen.vector(2);
        let eu = coherent(&u, 3);
        let ev = coherent(&v, 3);
        for op in &ops {
            let lhs = inner(&eu, &apply_schur(op, &ev, &config, 3));
            let rhs = truncated_expansion_element(&u, &v, op.w, &config, &cut);
            if lhs != rhs {
                return Outcome::fail(format!("trial {trial}, w = {}", op.w));
            }
        }
    }
    Outcome::pass("5 pairs x 13 weights")
}

// 5. ⟨u^k, V(z) v^j⟩ by coefficient extraction vs ⟨u^k, S_w v^j⟩,
//    k, j ≤ 3, |w| ≤ 4, K = 2, D = 3, M = 6.
fn criterion_theorem_reduction() -> Outcome {
    let config = BasisConfig::identity(2);
    let cut = Cutoffs::new(2, 6, 3).unwrap();
    let ops: Vec<_> = (-4..=4).map(|w| schur_terms(w, &cut)).collect();
    let mut gen = InputGen::new(707);
    for trial in 0..5 {
        let u = gen.vector(2);
        let v = gen.vector(2);
        for k in 0..=3 {
            for j in 0..=3 {
                let bra = power(&u, k);
                let ket = power(&v, j);
                for op in &ops {
                    let lhs = power_matrix_element(&u, k, &v, j, op.w, &config, &cut);
                    let rhs = inner(&bra, &apply_schur(op, &ket, &config, 3));
                    if lhs != rhs {
                        return Outcome::fail(format!("trial {trial}, k = {k}, j = {j}, w = {}", op.w));
                    }
                }
            }
        }
    }
    Outcome::pass("5 pairs x 16 (k, j) x 9 weights")
}

/// Coefficients of `z^0..z^order` in `Π_{k ≤ K} Σ_i (x_k z^k)^i / i!`.
fn exp_product(order: u32, modes: u32) -> Vec<Polynomial> {
    let mut series = vec![Polynomial::zero(); order as usize + 1];
    series[0] = Polynomial::one();
    for k in 1..=modes {
        let mut next = vec![Polynomial::zero(); order as usize + 1];
        for (deg, c) in series.iter().enumerate() {
            let mut i = 0;
            while deg as u32 + i * k <= order {
                let slot = deg + (i * k) as usize;
                next[slot] = next[slot].add(&c.mul(&Polynomial::var(k).pow(i).scale(&Scalar::inv_factorial(i))));
                i += 1;
            }
        }
        series = next;
    }
    series
}

// 6. S_0..S_3 against the truncated exponential product.
fn criterion_classical_schur() -> Outcome {
    let oracle = exp_product(3, 3);
    let x = Polynomial::var;
    let stated = [
        Polynomial::one(),
        x(1),
        x(2).add(&x(1).pow(2).scale(&Scalar::ratio(1, 2))),
        x(3).add(&x(1).mul(&x(2))).add(&x(1).pow(3).scale(&Scalar::ratio(1, 6))),
    ];
    for m in 0..=3u32 {
        let got = elementary_schur(m, 3);
        if got != oracle[m as usize] || got != stated[m as usize] {
            return Outcome::fail(format!("m = {m}: got {}", got.to_text("x")));
        }
    }
    Outcome::pass("S_0..S_3")
}

fn naive_sweep(m: u32, modes: u32) -> Vec<TuplePair> {
    let slots = 2 * modes as usize;
    let mut out = Vec::new();
    let mut exps = vec![0u32; slots];
    'outer: loop {
        if exps.iter().sum::<u32>() == m {
            let (p, q) = exps.split_at(modes as usize);
            out.push(TuplePair::new(MultiIndex::from_dense(p), MultiIndex::from_dense(q)));
        }
        for e in exps.iter_mut() {
            if *e < m {
                *e += 1;
                continue 'outer;
            }
            *e = 0;
        }
        return out;
    }
}

// 7. Enumeration vs naive sweep, m ≤ 5, |w| ≤ 10, K ≤ 4.
fn criterion_enumeration() -> Outcome {
    let mut cells = 0;
    for modes in 1..=4 {
        for m in 0..=5 {
            let all = naive_sweep(m, modes);
            for w in -10..=10 {
                let expected: BTreeSet<TuplePair> = all.iter().filter(|t| t.weight() == w).cloned().collect();
                let got = enumerate_pq(m, w, modes);
                let got_set: BTreeSet<TuplePair> = got.iter().cloned().collect();
                if got.len() != got_set.len() || got_set != expected {
                    return Outcome::fail(format!("enumerate_pq({m}, {w}, {modes})"));
                }
                if count_pq(m, w, modes) != got.len() as u128 {
                    return Outcome::fail(format!("count_pq({m}, {w}, {modes})"));
                }
                cells += 1;
            }
        }
    }
    Outcome::pass(format!("{cells} cells"))
}

// 8. `verify --seed 1 --trials 5` exits 0 and is byte-identical across runs.
fn criterion_cli_determinism() -> Outcome {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_vertex"))
            .args(["verify", "--seed", "1", "--trials", "5"])
            .output()
    };
    let (a, b) = match (run(), run()) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => return Outcome::fail(format!("spawn failed: {e}")),
    };
    if a.status.code() != Some(0) || b.status.code() != Some(0) {
        return Outcome::fail(format!("exit codes {:?}, {:?}", a.status.code(), b.status.code()));
    }
    if a.stdout != b.stdout || a.stderr != b.stderr {
        return Outcome::fail("outputs differ between runs");
    }
    Outcome::pass(format!("{} bytes, identical", a.stdout.len()))
}

fn main() {
    type Criterion = (&'static str, Option<Duration>, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("1 power inner products", Some(Duration::from_secs(1)), criterion_power_inner),
        ("2 coherent-vector identities", Some(Duration::from_secs(5)), criterion_coherent_identities),
        ("3 lemma term by term", Some(Duration::from_secs(10)), criterion_lemma),
        ("4 operator vs generating function", Some(Duration::from_secs(30)), criterion_operator_oracle),
        ("5 theorem reduction", Some(Duration::from_secs(10)), criterion_theorem_reduction),
        ("6 classical Schur values", Some(Duration::from_secs(1)), criterion_classical_schur),
        ("7 enumeration cross-check", Some(Duration::from_secs(5)), criterion_enumeration),
        ("8 CLI determinism", None, criterion_cli_determinism),
    ];

    let mut failures = 0;
    for (name, budget, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let within = budget.is_none_or(|b| elapsed < b);
        let ok = outcome.ok && within;
        if !ok {
            failures += 1;
        }
        let budget_str = budget.map(|b| format!(" (budget {:.0?})", b)).unwrap_or_default();
        println!(
            "criterion {name}: {} [{:.3?}{budget_str}] {}{}",
            if ok { "PASS" } else { "FAIL" },
            elapsed,
            outcome.detail,
            if within { "" } else { " (over time budget)" }
        );
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
