//! Exact maximum-clique and maximum-independent-set search, plus a naive
//! subset-enumeration oracle used as ground truth in tests.
//!
//! The main solver is branch and bound over bitset candidate sets with a
//! greedy-coloring upper bound, vertices pre-ordered by descending degree.
//! All outputs are deterministic for a fixed input.

use crate::error::Error;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Clique,
    IndependentSet,
}

/// A vertex set certified to induce a complete or edgeless subgraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousWitness {
    pub kind: WitnessKind,
    pub members: VertexSet,
}

impl HomogeneousWitness {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Checks the witness against the graph it is supposed to certify.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        match self.kind {
            WitnessKind::Clique => g.is_clique(&self.members),
            WitnessKind::IndependentSet => g.is_independent(&self.members),
        }
    }
}

struct Searcher {
    words: usize,
    adj: Vec<u64>,     // reordered adjacency, row-major
    order: Vec<usize>, // position -> original vertex
    best: Vec<usize>,  // reordered ids
    current: Vec<usize>,
    target: Option<usize>, // stop as soon as best reaches this size
}

impl Searcher {
    fn new(g: &Graph, target: Option<usize>) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let mut pos = vec![0usize; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        let words = n.div_ceil(64);
        let mut adj = vec![0u64; n * words];
        for (i, &v) in order.iter().enumerate() {
            for (u, &j) in pos.iter().enumerate() {
                if g.has_edge(v, u) {
                    adj[i * words + j / 64] |= 1 << (j % 64);
                }
            }
        }
        Searcher { words, adj, order, best: Vec::new(), current: Vec::new(), target }
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.adj[v * self.words..(v + 1) * self.words]
    }

    fn done(&self) -> bool {
        self.target.is_some_and(|t| self.best.len() >= t)
    }

    /// Greedy sequential coloring of `cand`; returns vertices in the order
    /// they should be branched on (ascending color) with their color bound.
    fn color_sort(&self, cand: &[u64]) -> Vec<(usize, usize)> {
        let mut uncolored = cand.to_vec();
        let mut out: Vec<(usize, usize)> = Vec::new();
        let mut color = 0;
        while uncolored.iter().any(|&w| w != 0) {
            color += 1;
            let mut avail = uncolored.clone();
            while let Some(v) = first_bit(&avail) {
                out.push((v, color));
                clear_bit(&mut uncolored, v);
                clear_bit(&mut avail, v);
                // remove neighbors of v from this color class
                let row = self.row(v);
                for (a, r) in avail.iter_mut().zip(row) {
                    *a &= !r;
                }
            }
        }
        out
    }

    fn expand(&mut self, cand: &[u64]) {
        let ordered = self.color_sort(cand);
        let mut cand = cand.to_vec();
        // branch from the highest color downwards
        for &(v, color) in ordered.iter().rev() {
            if self.done() {
                return;
            }
            if self.current.len() + color <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next: Vec<u64> = cand.iter().zip(self.row(v)).map(|(c, r)| c & r).collect();
            if next.iter().all(|&w| w == 0) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(&next);
            }
            self.current.pop();
            clear_bit(&mut cand, v);
        }
    }

    fn run(mut self) -> VertexSet {
        let n = self.order.len();
        if n > 0 {
            let mut all = vec![u64::MAX; self.words];
            if !n.is_multiple_of(64) {
                all[self.words - 1] = (1u64 << (n % 64)) - 1;
            }
            self.expand(&all);
        }
        VertexSet::new(self.best.iter().map(|&i| self.order[i]).collect())
    }
}

fn first_bit(bits: &[u64]) -> Option<usize> {
    for (i, &w) in bits.iter().enumerate() {
        if w != 0 {
            return Some(i * 64 + w.trailing_zeros() as usize);
        }
    }
    None
}

fn clear_bit(bits: &mut [u64], v: usize) {
    bits[v / 64] &= !(1u64 << (v % 64));
}

/// Maximum clique of `g`. The empty graph yields the empty witness.
pub fn max_clique(g: &Graph) -> HomogeneousWitness {
    let members = Searcher::new(g, None).run();
    debug_assert!(g.is_clique(&members));
    HomogeneousWitness { kind: WitnessKind::Clique, members }
}

/// Maximum independent set, computed as a maximum clique of the complement.
pub fn max_independent_set(g: &Graph) -> HomogeneousWitness {
    let members = Searcher::new(&g.complement(), None).run();
    debug_assert!(g.is_independent(&members));
    HomogeneousWitness { kind: WitnessKind::IndependentSet, members }
}

/// Clique number.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).size()
}

/// Independence number.
pub fn independence_number(g: &Graph) -> usize {
    max_independent_set(g).size()
}

/// Searches for a clique of size at least `k`, stopping early on success.
fn find_clique_at_least(g: &Graph, k: usize) -> Option<VertexSet> {
    if k > g.n() {
        return None;
    }
    let found = Searcher::new(g, Some(k)).run();
    (found.len() >= k).then_some(found)
}

/// Decision procedure for RAMSEY(k): a size-`k` clique or independent set
/// of `g`, if one exists.
pub fn has_homogeneous(g: &Graph, k: usize) -> Option<HomogeneousWitness> {
    assert!(k >= 1, "k must be positive");
    if let Some(c) = find_clique_at_least(g, k) {
        return Some(HomogeneousWitness { kind: WitnessKind::Clique, members: c.truncated(k) });
    }
    if let Some(i) = find_clique_at_least(&g.complement(), k) {
        return Some(HomogeneousWitness {
            kind: WitnessKind::IndependentSet,
            members: i.truncated(k),
        });
    }
    None
}

/// Default vertex-count guard for the naive oracle.
pub const BRUTE_FORCE_GUARD: usize = 30;

fn for_each_k_subset<F: FnMut(&[usize]) -> bool>(n: usize, k: usize, mut f: F) {
    // lexicographic enumeration; f returns true to stop
    if k > n {
        return;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return;
        }
        // advance to the next combination in lexicographic order
        let mut i = k;
        while i > 0 && idx[i - 1] == i - 1 + n - k {
            i -= 1;
        }
        if i == 0 {
            return;
        }
        idx[i - 1] += 1;
        for j in i..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn subset_is_clique(g: &Graph, s: &[usize]) -> bool {
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if !g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

fn subset_is_independent(g: &Graph, s: &[usize]) -> bool {
    for (i, &u) in s.iter().enumerate() {
        for &v in &s[i + 1..] {
            if g.has_edge(u, v) {
                return false;
            }
        }
    }
    true
}

/// Independent oracle: enumerates all k-subsets and returns the first (in
/// lexicographic order) that is a clique or an independent set. Guarded to
/// desk scale unless `override_guard` is set.
pub fn brute_force_homogeneous(
    g: &Graph,
    k: usize,
    override_guard: bool,
) -> Result<Option<HomogeneousWitness>, Error> {
    assert!(k >= 1, "k must be positive");
    if g.n() > BRUTE_FORCE_GUARD && !override_guard {
        return Err(Error::BruteForceGuard { n: g.n(), limit: BRUTE_FORCE_GUARD });
    }
    let mut found = None;
    for_each_k_subset(g.n(), k, |s| {
        if subset_is_clique(g, s) {
            found = Some(HomogeneousWitness {
                kind: WitnessKind::Clique,
                members: VertexSet::new(s.to_vec()),
            });
            true
        } else if subset_is_independent(g, s) {
            found = Some(HomogeneousWitness {
                kind: WitnessKind::IndependentSet,
                members: VertexSet::new(s.to_vec()),
            });
            true
        } else {
            false
        }
    });
    Ok(found)
}

/// Naive k-clique oracle (clique only, no independent-set side).
pub fn brute_force_clique(
    g: &Graph,
    k: usize,
    override_guard: bool,
) -> Result<Option<VertexSet>, Error> {
    if g.n() > BRUTE_FORCE_GUARD && !override_guard {
        return Err(Error::BruteForceGuard { n: g.n(), limit: BRUTE_FORCE_GUARD });
    }
    if k == 0 {
        return Ok(Some(VertexSet::empty()));
    }
    let mut found = None;
    for_each_k_subset(g.n(), k, |s| {
        if subset_is_clique(g, s) {
            found = Some(VertexSet::new(s.to_vec()));
            true
        } else {
            false
        }
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn petersen() -> Graph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5)); // outer cycle
            edges.push((i, i + 5)); // spoke
            edges.push((i + 5, (i + 2) % 5 + 5)); // inner pentagram
        }
        Graph::from_edges(10, &edges).unwrap()
    }

    fn random_graph(n: usize, rng: &mut impl Rng) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.random_bool(0.5) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn max_clique_examples() {
        assert_eq!(max_clique(&Graph::complete(5)).size(), 5);
        assert_eq!(max_clique(&Graph::cycle(5)).size(), 2);
        assert_eq!(max_clique(&petersen()).size(), 2);
        assert_eq!(max_clique(&Graph::empty(0)).size(), 0);
    }

    #[test]
    fn max_independent_set_examples() {
        assert_eq!(max_independent_set(&Graph::empty(4)).size(), 4);
        assert_eq!(max_independent_set(&Graph::cycle(5)).size(), 2);
        assert_eq!(max_independent_set(&petersen()).size(), 4);
    }

    #[test]
    fn has_homogeneous_examples() {
        let c5 = Graph::cycle(5);
        assert!(has_homogeneous(&c5, 3).is_none());
        let w = has_homogeneous(&c5, 2).unwrap();
        assert!(w.is_valid_in(&c5) && w.size() == 2);
        let w1 = has_homogeneous(&petersen(), 1).unwrap();
        assert_eq!(w1.size(), 1);
    }

    #[test]
    fn brute_force_examples() {
        assert!(brute_force_homogeneous(&Graph::cycle(5), 3, false).unwrap().is_none());
        assert!(brute_force_homogeneous(&Graph::complete(4), 4, false).unwrap().is_some());
    }

    #[test]
    fn brute_force_guard_fires() {
        let g = Graph::empty(31);
        assert!(brute_force_homogeneous(&g, 2, false).is_err());
        assert!(brute_force_homogeneous(&g, 31, true).unwrap().is_some());
    }

    #[test]
    fn oracle_equivalence_random_sample() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.random_range(1..=12);
            let g = random_graph(n, &mut rng);
            for k in 1..=n {
                let fast = has_homogeneous(&g, k);
                let slow = brute_force_homogeneous(&g, k, false).unwrap();
                assert_eq!(fast.is_some(), slow.is_some(), "n={n} k={k}");
                if let Some(w) = fast {
                    assert!(w.is_valid_in(&g));
                    assert_eq!(w.size(), k);
                }
            }
        }
    }

    #[test]
    fn determinism() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = random_graph(14, &mut rng);
        assert_eq!(max_clique(&g), max_clique(&g));
        assert_eq!(has_homogeneous(&g, 3), has_homogeneous(&g, 3));
    }

    proptest! {
        #[test]
        fn alpha_equals_omega_of_complement(seed in any::<u64>(), n in 0usize..12) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(n, &mut rng);
            prop_assert_eq!(independence_number(&g), clique_number(&g.complement()));
        }

        #[test]
        fn homogeneous_monotone(seed in any::<u64>(), n in 2usize..10) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let g = random_graph(n, &mut rng);
            for k in 2..=n {
                if has_homogeneous(&g, k).is_some() {
                    prop_assert!(has_homogeneous(&g, k - 1).is_some());
                }
            }
        }
    }
}
