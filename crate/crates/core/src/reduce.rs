//! The two polynomial-time reductions: CLIQUE to RAMSEY(k), and RAMSEY(k)
//! to its refinement variant. Both lay out the original graph first so that
//! witnesses decode by index arithmetic.

use crate::construct::{Instance, RefinementWitnesses};
use crate::error::Error;
use crate::graph::{Graph, VertexSet};

/// CLIQUE -> RAMSEY: join G with a clique on n+1 vertices and ask for a
/// homogeneous set of size k+n+1. The added clique pushes the clique number
/// to omega(G)+n+1 while capping the independence number at n, so the
/// answer tracks exactly whether G has a k-clique.
pub fn clique_to_ramsey(g: &Graph, k: usize) -> Result<Instance, Error> {
    let n = g.n();
    if n < 1 || k < 1 || k > n {
        return Err(Error::KOutOfRange { k, n });
    }
    let g_prime = g.join(&Graph::complete(n + 1));
    Ok(Instance::new(g_prime, k + n + 1))
}

/// RAMSEY -> REFINEMENT RAMSEY: add a disjoint clique C on k-1 vertices,
/// then an independent set I on k vertices joined to everything else, and
/// raise the parameter to k+1. I itself and C plus any vertex of I are the
/// size-k refinement witnesses of the output.
pub fn ramsey_to_refinement(g: &Graph, k: usize) -> Result<Instance, Error> {
    if k < 3 {
        return Err(Error::ParameterTooSmall { name: "k", value: k, min: 3 });
    }
    let n = g.n();
    // layout: copy of g [0, n), clique C [n, n+k-1), independent I [n+k-1, n+2k-1)
    let c_range = n..n + k - 1;
    let i_range = n + k - 1..n + 2 * k - 1;
    let mut edges = g.edges();
    for u in c_range.clone() {
        for v in (u + 1)..n + k - 1 {
            edges.push((u, v));
        }
    }
    for i in i_range.clone() {
        for v in 0..n + k - 1 {
            edges.push((v, i));
        }
    }
    let g_prime = Graph::from_edges(n + 2 * k - 1, &edges)?;

    let independent = VertexSet::new(i_range.clone().collect());
    let clique = VertexSet::new(c_range.chain(i_range.take(1)).collect());
    debug_assert!(g_prime.is_independent(&independent));
    debug_assert!(g_prime.is_clique(&clique));
    Ok(Instance {
        graph: g_prime,
        k: k + 1,
        witnesses: Some(RefinementWitnesses { clique, independent }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solve::{
        brute_force_clique, brute_force_homogeneous, clique_number, independence_number,
    };
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn clique_to_ramsey_examples() {
        let out = clique_to_ramsey(&Graph::complete(3), 3).unwrap();
        assert_eq!(out.k, 7);
        assert_eq!(out.graph.n(), 7);
        assert_eq!(clique_number(&out.graph), 7);

        let out = clique_to_ramsey(&Graph::empty(3), 2).unwrap();
        assert_eq!(out.k, 6);
        assert_eq!(clique_number(&out.graph), 5);
        assert_eq!(independence_number(&out.graph), 3);
        assert!(brute_force_homogeneous(&out.graph, 6, false).unwrap().is_none());

        let out = clique_to_ramsey(&Graph::complete(1), 1).unwrap();
        assert_eq!(out.k, 3);
        assert_eq!(clique_number(&out.graph), 3);
    }

    #[test]
    fn clique_to_ramsey_rejects_bad_k() {
        assert!(clique_to_ramsey(&Graph::complete(3), 4).is_err());
        assert!(clique_to_ramsey(&Graph::complete(3), 0).is_err());
        assert!(clique_to_ramsey(&Graph::empty(0), 1).is_err());
    }

    #[test]
    fn ramsey_to_refinement_examples() {
        let out = ramsey_to_refinement(&Graph::complete(3), 3).unwrap();
        assert_eq!(out.k, 4);
        assert_eq!(out.graph.n(), 8);
        assert!(clique_number(&out.graph) >= 4);
        assert!(out.check_refinement_legal().is_ok());

        let out = ramsey_to_refinement(&Graph::cycle(5), 3).unwrap();
        assert_eq!(out.k, 4);
        assert_eq!(clique_number(&out.graph), 3);
        assert_eq!(independence_number(&out.graph), 3);
        assert!(out.check_refinement_legal().is_ok());

        assert!(ramsey_to_refinement(&Graph::cycle(5), 2).is_err());
    }

    #[test]
    fn size_accounting() {
        let g = Graph::cycle(7);
        assert_eq!(clique_to_ramsey(&g, 3).unwrap().graph.n(), 15); // 2n + 1
        assert_eq!(ramsey_to_refinement(&g, 4).unwrap().graph.n(), 14); // n + 2k - 1
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
    fn clique_reduction_equivalence_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let n = rng.random_range(1..=7);
            let g = random_graph(n, &mut rng);
            for k in 1..=n {
                let input_yes = brute_force_clique(&g, k, false).unwrap().is_some();
                let out = clique_to_ramsey(&g, k).unwrap();
                let output_yes =
                    brute_force_homogeneous(&out.graph, out.k, false).unwrap().is_some();
                assert_eq!(input_yes, output_yes, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn refinement_reduction_equivalence_small() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..40 {
            let n = rng.random_range(3..=7);
            let g = random_graph(n, &mut rng);
            for k in 3..=n.min(5) {
                let input_yes = brute_force_homogeneous(&g, k, false).unwrap().is_some();
                let out = ramsey_to_refinement(&g, k).unwrap();
                let output_yes =
                    brute_force_homogeneous(&out.graph, out.k, false).unwrap().is_some();
                assert_eq!(input_yes, output_yes, "n={n} k={k}");
                assert!(out.check_refinement_legal().is_ok());
            }
        }
    }
}
