//! Immutable simple graphs over dense vertex indices, with adjacency stored
//! as one fixed-width bit row per vertex so that neighborhood intersections
//! are word-parallel.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// A sorted, deduplicated subset of the vertex range of some graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn empty() -> Self {
        VertexSet { members: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    /// Keeps the `k` smallest members.
    pub fn truncated(&self, k: usize) -> Self {
        VertexSet { members: self.members[..k.min(self.members.len())].to_vec() }
    }

    pub fn in_range(&self, n: usize) -> bool {
        self.members.last().is_none_or(|&v| v < n)
    }
}

impl From<Vec<usize>> for VertexSet {
    fn from(v: Vec<usize>) -> Self {
        VertexSet::new(v)
    }
}

impl From<VertexSet> for Vec<usize> {
    fn from(s: VertexSet) -> Self {
        s.members
    }
}

const WORD_BITS: usize = 64;

fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS)
}

/// An immutable, undirected simple graph. No self-loops; adjacency is kept
/// symmetric by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph { n, words, rows: vec![0; n * words] }
    }

    /// The complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    /// The cycle 0-1-...-(n-1)-0. Requires `n >= 3` for a simple cycle;
    /// smaller `n` yields the path/edge/point degenerate cases.
    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::empty(n);
        if n >= 2 {
            for v in 0..n {
                let u = (v + 1) % n;
                if u != v {
                    g.set_edge(v, u);
                }
            }
        }
        g
    }

    /// Builds a graph from an edge list. Self-loops are rejected; duplicate
    /// and reversed duplicates are rejected as well.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange { v: u.max(v), n });
            }
            if u == v {
                return Err(Error::SelfLoop { v: u });
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge { u, v });
            }
            g.set_edge(u, v);
        }
        Ok(g)
    }

    fn set_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u * self.words + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.rows[v * self.words + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words per adjacency row.
    pub fn words(&self) -> usize {
        self.words
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// The adjacency bit row of `v`.
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Edge-complement: same vertices, edge present iff absent here.
    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            let src = self.row(v);
            let dst = &mut g.rows[v * g.words..(v + 1) * g.words];
            for w in 0..g.words {
                dst[w] = !src[w];
            }
            // clear the diagonal bit and the tail beyond n
            dst[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
            if !self.n.is_multiple_of(WORD_BITS) && g.words > 0 {
                dst[g.words - 1] &= (1u64 << (self.n % WORD_BITS)) - 1;
            }
        }
        g
    }

    /// Disjoint union plus all edges between the two parts. Vertices of
    /// `self` keep their indices; vertices of `other` are shifted by `self.n`.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in self.n..self.n + other.n {
                g.set_edge(u, v);
            }
        }
        g
    }

    /// Disjoint union; `other`'s vertices are shifted by `self.n`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n);
        for (u, v) in self.edges() {
            g.set_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.set_edge(u + self.n, v + self.n);
        }
        g
    }

    /// Subgraph induced by `s`, relabeled densely in the order of `s`
    /// (ascending, since `VertexSet` is sorted).
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph, Error> {
        if !s.in_range(self.n) {
            return Err(Error::VertexOutOfRange {
                v: *s.members().last().unwrap(),
                n: self.n,
            });
        }
        let verts = s.members();
        let mut g = Graph::empty(verts.len());
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.set_edge(i, j);
                }
            }
        }
        Ok(g)
    }

    /// Disjoint union of `locals`, plus all edges between blocks `u` and `v`
    /// exactly when `pattern` has the edge `(u, v)`.
    pub fn connect_by_pattern(locals: &[Graph], pattern: &Graph) -> Result<Graph, Error> {
        if locals.len() != pattern.n() {
            return Err(Error::PatternLengthMismatch {
                locals: locals.len(),
                pattern: pattern.n(),
            });
        }
        let mut offsets = Vec::with_capacity(locals.len() + 1);
        let mut total = 0;
        for l in locals {
            offsets.push(total);
            total += l.n();
        }
        offsets.push(total);

        let mut g = Graph::empty(total);
        for (b, l) in locals.iter().enumerate() {
            for (u, v) in l.edges() {
                g.set_edge(u + offsets[b], v + offsets[b]);
            }
        }
        for (bu, bv) in pattern.edges() {
            for u in offsets[bu]..offsets[bu + 1] {
                for v in offsets[bv]..offsets[bv + 1] {
                    g.set_edge(u, v);
                }
            }
        }
        Ok(g)
    }

    /// Block offsets of `connect_by_pattern` output: block `b` occupies
    /// `[offsets[b], offsets[b+1])`.
    pub fn block_offsets(locals: &[Graph]) -> Vec<usize> {
        let mut offsets = Vec::with_capacity(locals.len() + 1);
        let mut total = 0;
        for l in locals {
            offsets.push(total);
            total += l.n();
        }
        offsets.push(total);
        offsets
    }

    /// True when `s` induces a complete subgraph.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let m = s.members();
        m.iter().all(|&v| v < self.n)
            && m.iter()
                .enumerate()
                .all(|(i, &u)| m[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    /// True when `s` induces an edgeless subgraph.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        let m = s.members();
        m.iter().all(|&v| v < self.n)
            && m.iter()
                .enumerate()
                .all(|(i, &u)| m[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c5() -> Graph {
        Graph::cycle(5)
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::empty(3).complement(), Graph::complete(3));
        let two_isolated = Graph::complete(2).complement();
        assert_eq!(two_isolated.edge_count(), 0);
        assert_eq!(two_isolated.n(), 2);
        // complement of C5 is 2-regular with 5 edges (a C5 again)
        let cc = c5().complement();
        assert_eq!(cc.edge_count(), 5);
        assert!((0..5).all(|v| cc.degree(v) == 2));
    }

    #[test]
    fn join_examples() {
        assert_eq!(Graph::complete(1).join(&Graph::complete(1)), Graph::complete(2));
        let c4 = Graph::empty(2).join(&Graph::empty(2));
        assert_eq!(c4.n(), 4);
        assert_eq!(c4.edge_count(), 4);
    }

    #[test]
    fn disjoint_union_examples() {
        let i2 = Graph::complete(1).disjoint_union(&Graph::complete(1));
        assert_eq!(i2, Graph::empty(2));
        let g = c5();
        assert_eq!(Graph::empty(0).disjoint_union(&g), g);
    }

    #[test]
    fn induced_subgraph_examples() {
        // C5 restricted to {0,1,2} is the path 0-1-2
        let p = c5().induced_subgraph(&VertexSet::new(vec![0, 1, 2])).unwrap();
        assert_eq!(p.edges(), vec![(0, 1), (1, 2)]);
        let g = c5();
        let all = VertexSet::new((0..5).collect());
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
        let k3 = Graph::complete(5)
            .induced_subgraph(&VertexSet::new(vec![1, 3, 4]))
            .unwrap();
        assert_eq!(k3, Graph::complete(3));
    }

    #[test]
    fn induced_subgraph_rejects_out_of_range() {
        let err = c5().induced_subgraph(&VertexSet::new(vec![0, 7]));
        assert!(err.is_err());
    }

    #[test]
    fn connect_by_pattern_examples() {
        let k1 = Graph::complete(1);
        let g = Graph::connect_by_pattern(&[k1.clone(), k1.clone()], &Graph::empty(2)).unwrap();
        assert_eq!(g, Graph::empty(2));
        let k2 = Graph::complete(2);
        let k4 = Graph::connect_by_pattern(&[k2.clone(), k2.clone()], &Graph::complete(2)).unwrap();
        assert_eq!(k4, Graph::complete(4));
        let c = c5();
        let same = Graph::connect_by_pattern(std::slice::from_ref(&c), &Graph::complete(1)).unwrap();
        assert_eq!(same, c);
    }

    #[test]
    fn connect_by_pattern_rejects_length_mismatch() {
        let r = Graph::connect_by_pattern(&[Graph::complete(1)], &Graph::empty(2));
        assert!(r.is_err());
    }

    #[test]
    fn from_edges_rejects_bad_input() {
        assert!(Graph::from_edges(3, &[(0, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 3)]).is_err());
    }

    prop_compose! {
        fn arb_graph(max_n: usize)(n in 0..=max_n)
            (n in Just(n), bits in prop::collection::vec(any::<bool>(), n * (n.max(1) - 1) / 2))
        -> Graph {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        }
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph(12)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn join_edge_count(g1 in arb_graph(8), g2 in arb_graph(8)) {
            let j = g1.join(&g2);
            prop_assert_eq!(j.edge_count(), g1.edge_count() + g2.edge_count() + g1.n() * g2.n());
        }

        #[test]
        fn pattern_extremes_match_iterated_combinators(g1 in arb_graph(6), g2 in arb_graph(6), g3 in arb_graph(6)) {
            let locals = [g1.clone(), g2.clone(), g3.clone()];
            let joined = Graph::connect_by_pattern(&locals, &Graph::complete(3)).unwrap();
            prop_assert_eq!(joined, g1.join(&g2).join(&g3));
            let unioned = Graph::connect_by_pattern(&locals, &Graph::empty(3)).unwrap();
            prop_assert_eq!(unioned, g1.disjoint_union(&g2).disjoint_union(&g3));
        }
    }
}
