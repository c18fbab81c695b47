//! Host graphs: graphs with clique and independence number at most `ell`
//! whose vertex set is covered by size-`ell` cliques and independent sets.
//! Three strategies produce them: the Turan-complement construction, greedy
//! cover extraction from a shipped Ramsey witness, and seeded random search.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::ramsey::{verify_ramsey_witness, RamseyTable};
use crate::solve::{clique_number, has_homogeneous, independence_number};

#[derive(Debug, Clone)]
pub struct HostGraph {
    pub h: Graph,
    pub ell: usize,
    pub cover: Vec<VertexSet>,
}

/// Integer ceil(sqrt(t)).
fn ceil_sqrt(t: usize) -> usize {
    let mut r = (t as f64).sqrt() as usize;
    while r * r < t {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= t {
        r -= 1;
    }
    r
}

/// The complement of the Turan graph T(l^2, l) with l = ceil(sqrt(t)):
/// l disjoint l-cliques. Every vertex lies in its group clique and in a
/// cross-group independent set, both of size exactly l.
pub fn turan_complement_host(t: usize) -> HostGraph {
    assert!(t >= 1);
    let ell = ceil_sqrt(t);
    let groups: Vec<Graph> = (0..ell).map(|_| Graph::complete(ell)).collect();
    let h = Graph::connect_by_pattern(&groups, &Graph::empty(ell)).expect("lengths match");

    let mut cover = Vec::new();
    for g in 0..ell {
        cover.push(VertexSet::new((g * ell..(g + 1) * ell).collect()));
    }
    for j in 0..ell {
        let cross = VertexSet::new((0..ell).map(|g| g * ell + j).collect());
        if !cover.contains(&cross) {
            cover.push(cross); // coincides with the clique only when ell = 1
        }
    }
    HostGraph { h, ell, cover }
}

/// Greedily extracts disjoint size-`ell` cliques/independent sets until at
/// least `target` vertices are covered. Returns `None` if the exact solver
/// finds no size-`ell` homogeneous set among the uncovered vertices.
fn extract_cover(g: &Graph, ell: usize, target: usize) -> Option<Vec<VertexSet>> {
    let mut covered = vec![false; g.n()];
    let mut union_size = 0;
    let mut sets = Vec::new();
    while union_size < target {
        let uncovered: Vec<usize> =
            (0..g.n()).filter(|&v| !covered[v]).collect();
        let sub = g
            .induced_subgraph(&VertexSet::new(uncovered.clone()))
            .expect("uncovered vertices are in range");
        let found = has_homogeneous(&sub, ell)?;
        let set = VertexSet::new(found.members.iter().map(|i| uncovered[i]).collect());
        for v in set.iter() {
            covered[v] = true;
        }
        union_size += set.len();
        sets.push(set);
    }
    Some(sets)
}

/// Drops sets, scanning in reverse acquisition order, while the union of the
/// survivors stays at least `target`. The result is minimal: removing any
/// one remaining set drops the union below `target`.
fn prune_minimal(sets: Vec<VertexSet>, n: usize, target: usize) -> Vec<VertexSet> {
    let mut keep = vec![true; sets.len()];
    let union_size = |keep: &[bool]| {
        let mut seen = vec![false; n];
        for (s, &k) in sets.iter().zip(keep) {
            if k {
                for v in s.iter() {
                    seen[v] = true;
                }
            }
        }
        seen.iter().filter(|&&b| b).count()
    };
    for i in (0..sets.len()).rev() {
        keep[i] = false;
        if union_size(&keep) < target {
            keep[i] = true;
        }
    }
    sets.into_iter().zip(keep).filter_map(|(s, k)| k.then_some(s)).collect()
}

/// Restricts `g` to the union of `sets` and remaps the sets to the dense
/// relabeling.
fn induce_on_union(g: &Graph, ell: usize, sets: Vec<VertexSet>) -> HostGraph {
    let union: Vec<usize> = {
        let mut all: Vec<usize> = sets.iter().flat_map(|s| s.iter()).collect();
        all.sort_unstable();
        all.dedup();
        all
    };
    let h = g
        .induced_subgraph(&VertexSet::new(union.clone()))
        .expect("union is in range");
    let index_of = |v: usize| union.binary_search(&v).expect("vertex is in the union");
    let cover = sets
        .into_iter()
        .map(|s| VertexSet::new(s.iter().map(index_of).collect()))
        .collect();
    HostGraph { h, ell, cover }
}

/// Builds a host graph from a Ramsey witness for `ell + 1`: greedy cover
/// extraction, minimal pruning to a union of at least `t` vertices, and
/// restriction to that union.
pub fn witness_host(
    t: usize,
    ell: usize,
    witness: &Graph,
    table: &RamseyTable,
) -> Result<HostGraph, Error> {
    assert!(t >= 1 && ell >= 1);
    if !verify_ramsey_witness(witness, ell + 1) {
        return Err(Error::NotRamseyWitness { k: ell + 1 });
    }
    let r_ell = table.get(ell).ok_or(Error::TableInsufficient { t, max_t: 0 })?;
    if witness.n() < r_ell + t {
        return Err(Error::WitnessTooSmall { n: witness.n(), required: r_ell + t });
    }
    // While fewer than t vertices are covered, at least R(ell) remain
    // uncovered, so a size-ell homogeneous set always exists among them.
    let sets = extract_cover(witness, ell, t).ok_or(Error::CoverStalled { ell })?;
    let sets = prune_minimal(sets, witness.n(), t);
    Ok(induce_on_union(witness, ell, sets))
}

/// Seeded random realization of the host-graph guess: sample edge-probability
/// 1/2 graphs on `t_vertices` vertices until one is a Ramsey witness for
/// `ell + 1` and supports a cover of at least `t` vertices.
pub fn random_host(
    t: usize,
    ell: usize,
    t_vertices: usize,
    max_trials: usize,
    seed: u64,
) -> Result<HostGraph, Error> {
    assert!(t_vertices >= t, "T must be at least t");
    for trial in 0..max_trials {
        let mut rng =
            ChaCha8Rng::seed_from_u64(seed ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        let sample = gnp_half(t_vertices, &mut rng);
        if !verify_ramsey_witness(&sample, ell + 1) {
            continue;
        }
        let Some(sets) = extract_cover(&sample, ell, t) else {
            continue;
        };
        let sets = prune_minimal(sets, sample.n(), t);
        return Ok(induce_on_union(&sample, ell, sets));
    }
    Err(Error::TrialsExhausted { trials: max_trials })
}

/// Wraps a caller-supplied graph as a host: checks it is a Ramsey witness
/// for `ell + 1` and greedily covers every vertex with size-`ell` cliques
/// and independent sets.
pub fn host_from_graph(g: Graph, ell: usize) -> Result<HostGraph, Error> {
    if !verify_ramsey_witness(&g, ell + 1) {
        return Err(Error::NotRamseyWitness { k: ell + 1 });
    }
    let n = g.n();
    let cover = extract_cover(&g, ell, n).ok_or(Error::CoverStalled { ell })?;
    Ok(HostGraph { h: g, ell, cover })
}

/// G(n, 1/2) sample.
pub fn gnp_half(n: usize, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.random_bool(0.5) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("sampled pairs are simple")
}

/// Paley graph on Z_q for a prime q = 1 (mod 4): u ~ v iff u - v is a
/// nonzero quadratic residue. Classical Ramsey witnesses at small scale;
/// always re-verified by the solver before use, never trusted.
pub fn paley(q: usize) -> Result<Graph, Error> {
    let is_prime = q >= 2 && (2..q).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d));
    if !is_prime || q % 4 != 1 {
        return Err(Error::BadPaleyModulus { q });
    }
    let mut residue = vec![false; q];
    for x in 1..q {
        residue[x * x % q] = true;
    }
    let mut edges = Vec::new();
    for u in 0..q {
        for v in (u + 1)..q {
            if residue[(v - u) % q] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(q, &edges)
}

/// A violated host-graph invariant, for diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HostViolation {
    CliqueTooLarge { omega: usize, ell: usize },
    IndependentSetTooLarge { alpha: usize, ell: usize },
    CoverSetWrongSize { index: usize, size: usize, ell: usize },
    CoverSetOutOfRange { index: usize },
    CoverSetNotHomogeneous { index: usize },
    UncoveredVertex { v: usize },
}

impl std::fmt::Display for HostViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HostViolation::CliqueTooLarge { omega, ell } => {
                write!(f, "clique number {omega} exceeds ell={ell}")
            }
            HostViolation::IndependentSetTooLarge { alpha, ell } => {
                write!(f, "independence number {alpha} exceeds ell={ell}")
            }
            HostViolation::CoverSetWrongSize { index, size, ell } => {
                write!(f, "cover set {index} has {size} vertices, expected {ell}")
            }
            HostViolation::CoverSetOutOfRange { index } => {
                write!(f, "cover set {index} has out-of-range vertices")
            }
            HostViolation::CoverSetNotHomogeneous { index } => {
                write!(f, "cover set {index} induces neither a clique nor an independent set")
            }
            HostViolation::UncoveredVertex { v } => {
                write!(f, "vertex {v} is not covered by any cover set")
            }
        }
    }
}

/// Checks all three host invariants with the exact solver. Run before every
/// embedding.
pub fn validate_host(host: &HostGraph) -> Result<(), HostViolation> {
    let omega = clique_number(&host.h);
    if omega > host.ell {
        return Err(HostViolation::CliqueTooLarge { omega, ell: host.ell });
    }
    let alpha = independence_number(&host.h);
    if alpha > host.ell {
        return Err(HostViolation::IndependentSetTooLarge { alpha, ell: host.ell });
    }
    let mut covered = vec![false; host.h.n()];
    for (index, s) in host.cover.iter().enumerate() {
        if !s.in_range(host.h.n()) {
            return Err(HostViolation::CoverSetOutOfRange { index });
        }
        if s.len() != host.ell {
            return Err(HostViolation::CoverSetWrongSize { index, size: s.len(), ell: host.ell });
        }
        if !host.h.is_clique(s) && !host.h.is_independent(s) {
            return Err(HostViolation::CoverSetNotHomogeneous { index });
        }
        for v in s.iter() {
            covered[v] = true;
        }
    }
    if let Some(v) = covered.iter().position(|&c| !c) {
        return Err(HostViolation::UncoveredVertex { v });
    }
    Ok(())
}
