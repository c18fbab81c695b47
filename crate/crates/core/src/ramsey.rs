//! Exact small Ramsey numbers: the shipped table, exhaustive computation by
//! labeled-graph enumeration, witness verification, bound evaluators, and
//! the consecutive-gap finder.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::solve::has_homogeneous;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Classical value, recomputable here by exhaustive enumeration.
    Classical,
    /// Computed by this crate's exhaustive search.
    Computed,
    /// Known in the literature but not recomputed here; never load-bearing
    /// for correctness.
    External,
}

/// Exact values of R(k) for small k.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RamseyTable {
    entries: BTreeMap<usize, (usize, Provenance)>,
}

impl RamseyTable {
    /// The table the toolkit ships with: R(1)=1, R(2)=2, R(3)=6 and the
    /// external entry R(4)=18.
    pub fn shipped() -> Self {
        let mut entries = BTreeMap::new();
        entries.insert(1, (1, Provenance::Classical));
        entries.insert(2, (2, Provenance::Classical));
        entries.insert(3, (6, Provenance::Classical));
        entries.insert(4, (18, Provenance::External));
        let t = RamseyTable { entries };
        debug_assert!(t.is_consistent());
        t
    }

    pub fn get(&self, k: usize) -> Option<usize> {
        self.entries.get(&k).map(|&(v, _)| v)
    }

    pub fn provenance(&self, k: usize) -> Option<Provenance> {
        self.entries.get(&k).map(|&(_, p)| p)
    }

    pub fn max_k(&self) -> usize {
        self.entries.keys().copied().max().unwrap_or(0)
    }

    pub fn insert(&mut self, k: usize, value: usize, provenance: Provenance) {
        self.entries.insert(k, (value, provenance));
    }

    /// Strictly increasing in k, with R(1)=1 and R(2)=2 present.
    pub fn is_consistent(&self) -> bool {
        if self.get(1) != Some(1) || self.get(2) != Some(2) {
            return false;
        }
        self.entries
            .values()
            .zip(self.entries.values().skip(1))
            .all(|(&(a, _), &(b, _))| a < b)
    }
}

/// True iff `g` contains neither a clique nor an independent set of size
/// `k`; certifies R(k) > n.
pub fn verify_ramsey_witness(g: &Graph, k: usize) -> bool {
    has_homogeneous(g, k).is_none()
}

/// Largest vertex count the labeled enumeration will attempt (2^C(n,2)
/// graphs each).
const ENUMERATION_MAX_N: usize = 8;

fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("mask graphs are simple by construction")
}

/// True iff every one of the 2^C(n,2) labeled graphs on `n` vertices has a
/// k-clique or k-independent set, i.e. R(k) <= n.
pub fn all_graphs_forced(n: usize, k: usize) -> Result<bool, Error> {
    let pairs = n * (n.saturating_sub(1)) / 2;
    if n > ENUMERATION_MAX_N {
        return Err(Error::EnumerationScaleGuard { n, pairs });
    }
    let total: u64 = 1 << pairs;
    Ok((0..total)
        .into_par_iter()
        .all(|mask| has_homogeneous(&graph_from_mask(n, mask), k).is_some()))
}

/// Smallest N <= n_cap such that every labeled graph on N vertices has a
/// k-clique or k-independent set: the exact Ramsey number R(k), computed
/// exhaustively.
pub fn compute_ramsey_exhaustive(k: usize, n_cap: usize) -> Result<usize, Error> {
    assert!(k >= 1 && n_cap >= 1);
    for n in 1..=n_cap {
        if all_graphs_forced(n, k)? {
            return Ok(n);
        }
    }
    Err(Error::CapExceeded { k, cap: n_cap })
}

/// Certified lower bound ceil(2^((N-1)/2)) <= R(N).
pub fn erdos_lower_bound(n: usize) -> u64 {
    assert!((1..=63).contains(&n), "N must be in 1..=63");
    if (n - 1).is_multiple_of(2) {
        1u64 << ((n - 1) / 2)
    } else {
        // ceil(2^(m + 1/2)) = ceil(2^m * sqrt(2)), via integer sqrt of 2^(N-1)
        let square = 1u128 << (n - 1);
        let mut r = (square as f64).sqrt() as u128;
        while r * r < square {
            r += 1;
        }
        while r > 0 && (r - 1) * (r - 1) >= square {
            r -= 1;
        }
        r as u64
    }
}

/// Dominant term of the probabilistic lower bound, k * 2^(k/2) / (e*sqrt(2)).
/// NON-CERTIFIED: the vanishing correction term is dropped; informational
/// only, never used in correctness decisions.
pub fn spencer_lower_estimate(k: usize) -> f64 {
    assert!(k >= 1);
    k as f64 * 2f64.powf(k as f64 / 2.0) / (std::f64::consts::E * 2f64.sqrt())
}

/// log2(t), floored at 1 for small t.
pub fn log2_at_least_one(t: usize) -> f64 {
    (t as f64).log2().max(1.0)
}

/// A certified gap between consecutive Ramsey numbers: R(ell+1) > R(ell) + t,
/// with T = R(ell) + t.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapResult {
    pub ell: usize,
    pub t_vertices: usize,
}

/// Smallest ell with both R(ell) and R(ell+1) in the table and
/// R(ell+1) > R(ell) + t. With the shipped exact table this reaches t <= 11;
/// beyond that the error directs callers to the Turan strategy.
pub fn ramsey_gap(t: usize, table: &RamseyTable) -> Result<GapResult, Error> {
    assert!(t > 3, "the gap statement applies to t > 3");
    let bound = (8.0 * log2_at_least_one(t)).ceil() as usize;
    for ell in 1..table.max_k() {
        let (Some(r), Some(r_next)) = (table.get(ell), table.get(ell + 1)) else {
            continue;
        };
        if r_next > r + t {
            assert!(ell <= bound, "gap index {ell} exceeds ceil(8 log2 t) = {bound}");
            return Ok(GapResult { ell, t_vertices: r + t });
        }
    }
    // the largest t certified: max over ell of R(ell+1) - R(ell) - 1
    let max_t = (1..table.max_k())
        .filter_map(|ell| Some(table.get(ell + 1)? - table.get(ell)? - 1))
        .max()
        .unwrap_or(0);
    Err(Error::TableInsufficient { t, max_t })
}
