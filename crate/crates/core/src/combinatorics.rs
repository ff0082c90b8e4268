//! Enumeration of tuple pairs `(p, q)` by total degree `m` and net weight `w`.
//!
//! A pair belongs to cell `(m, w)` when `deg p + deg q = m` and
//! `weight p - weight q = w`. Without a mode cutoff these cells are infinite
//! (`p_j = q_j = 1` lands in `(2, 0)` for every `j`), so every entry point
//! takes `K`.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::multi_index::MultiIndex;

/// Creation exponents `p` and annihilation exponents `q`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct TuplePair {
    pub p: MultiIndex,
    pub q: MultiIndex,
}

impl TuplePair {
    pub fn new(p: MultiIndex, q: MultiIndex) -> Self {
        Self { p, q }
    }

    /// `deg p + deg q`.
    pub fn order(&self) -> u32 {
        self.p.degree() + self.q.degree()
    }

    /// `weight p - weight q`.
    pub fn weight(&self) -> i64 {
        self.p.weight() as i64 - self.q.weight() as i64
    }

    pub fn swapped(&self) -> Self {
        Self::new(self.q.clone(), self.p.clone())
    }
}

/// Mode cutoff `K`, order cutoff `M`, degree cutoff `D`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Cutoffs {
    pub modes: u32,
    pub order: u32,
    pub degree: u32,
}

impl Cutoffs {
    pub fn new(modes: u32, order: u32, degree: u32) -> Result<Self> {
        let c = Self { modes, order, degree };
        c.validate()?;
        Ok(c)
    }

    pub fn validate(&self) -> Result<()> {
        if self.modes == 0 {
            return Err(Error::InvalidCutoffs("mode cutoff K must be at least 1".into()));
        }
        Ok(())
    }

    /// Largest `|w|` reachable at these cutoffs, `K·M`.
    pub fn weight_bound(&self) -> i64 {
        self.modes as i64 * self.order as i64
    }
}

/// All pairs in cell `(m, w)` with support in `1..=K`, in lexicographic
/// order (`p` first, then `q`, each compared entry by entry in mode order).
pub fn enumerate_pq(m: u32, w: i64, modes: u32) -> Vec<TuplePair> {
    assert!(modes >= 1, "mode cutoff must be at least 1");
    if w.unsigned_abs() > modes as u64 * m as u64 {
        return Vec::new();
    }
    let mut p = vec![0u32; modes as usize];
    let mut q = vec![0u32; modes as usize];
    let mut out = Vec::new();
    distribute(modes, m, w, &mut p, &mut q, &mut out);
    out.sort_unstable();
    out
}

// Fills modes K, K-1, ..., 1. When mode `k` is reached, `remaining` units of
// degree are still unplaced and `target` is the weight they must produce.
fn distribute(k: u32, remaining: u32, target: i64, p: &mut [u32], q: &mut [u32], out: &mut Vec<TuplePair>) {
    if k == 0 {
        if remaining == 0 && target == 0 {
            out.push(TuplePair::new(MultiIndex::from_dense(p), MultiIndex::from_dense(q)));
        }
        return;
    }
    let kk = k as i64;
    for pk in 0..=remaining {
        for qk in 0..=(remaining - pk) {
            let rest = remaining - pk - qk;
            let next = target - kk * (pk as i64 - qk as i64);
            // modes below k reach at most (k-1)·rest in either direction
            if next.abs() > (kk - 1) * rest as i64 || (k == 1 && rest != 0) {
                continue;
            }
            p[k as usize - 1] = pk;
            q[k as usize - 1] = qk;
            distribute(k - 1, rest, next, p, q, out);
        }
    }
    p[k as usize - 1] = 0;
    q[k as usize - 1] = 0;
}

/// `|enumerate_pq(m, w, K)|`, counted from the generating function
/// `Π_{k=1}^{K} 1/((1 - y z^k)(1 - y z^{-k}))` without building any pair.
pub fn count_pq(m: u32, w: i64, modes: u32) -> u128 {
    assert!(modes >= 1, "mode cutoff must be at least 1");
    // series[d] maps weight -> number of pairs of degree d
    let mut series: Vec<HashMap<i64, u128>> = vec![HashMap::new(); m as usize + 1];
    series[0].insert(0, 1);
    for k in 1..=modes as i64 {
        for step in [k, -k] {
            // multiply by 1/(1 - y z^step): c'(d, s) = c(d, s) + c'(d - 1, s - step)
            for d in 1..=m as usize {
                let shifted: Vec<(i64, u128)> = series[d - 1].iter().map(|(&s, &c)| (s + step, c)).collect();
                for (s, c) in shifted {
                    *series[d].entry(s).or_insert(0) += c;
                }
            }
        }
    }
    series[m as usize].get(&w).copied().unwrap_or(0)
}

/// All `p` with `weight p = w` and support in `1..=K`, in lexicographic order.
pub fn enumerate_weight(w: u32, modes: u32) -> Vec<MultiIndex> {
    assert!(modes >= 1, "mode cutoff must be at least 1");
    let mut p = vec![0u32; modes as usize];
    let mut out = Vec::new();
    fill_weight(modes.min(w.max(1)), w, &mut p, &mut out);
    out.sort_unstable();
    out
}

fn fill_weight(k: u32, target: u32, p: &mut [u32], out: &mut Vec<MultiIndex>) {
    if k == 0 {
        if target == 0 {
            out.push(MultiIndex::from_dense(p));
        }
        return;
    }
    for e in 0..=target / k {
        p[k as usize - 1] = e;
        fill_weight(k - 1, target - e * k, p, out);
    }
    p[k as usize - 1] = 0;
}
