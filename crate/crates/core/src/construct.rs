//! The embedding machinery: dummy graphs, per-instance local graphs, and the
//! embedding of instance blocks into a host graph.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::host::HostGraph;
use crate::solve::{brute_force_clique, max_clique, max_independent_set};

/// Certificates that a graph is a legal refinement instance: a clique and an
/// independent set, each of size k-1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefinementWitnesses {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

/// A graph with its parameter and, optionally, refinement witnesses.
#[derive(Debug, Clone)]
pub struct Instance {
    pub graph: Graph,
    pub k: usize,
    pub witnesses: Option<RefinementWitnesses>,
}

impl Instance {
    pub fn new(graph: Graph, k: usize) -> Self {
        Instance { graph, k, witnesses: None }
    }

    /// Checks legality as a refinement instance: the graph contains both a
    /// clique and an independent set of size k-1. Attached witnesses are
    /// verified structurally; absent ones are searched for with the solver.
    pub fn check_refinement_legal(&self) -> Result<(), String> {
        let want = self.k - 1;
        match &self.witnesses {
            Some(w) => {
                if w.clique.len() != want {
                    return Err(format!(
                        "clique witness has {} vertices, expected {want}",
                        w.clique.len()
                    ));
                }
                if w.independent.len() != want {
                    return Err(format!(
                        "independent-set witness has {} vertices, expected {want}",
                        w.independent.len()
                    ));
                }
                if !self.graph.is_clique(&w.clique) {
                    return Err("clique witness is not a clique".into());
                }
                if !self.graph.is_independent(&w.independent) {
                    return Err("independent-set witness is not independent".into());
                }
                Ok(())
            }
            None => {
                if max_clique(&self.graph).size() < want {
                    return Err(format!("graph has no clique of size {want}"));
                }
                if max_independent_set(&self.graph).size() < want {
                    return Err(format!("graph has no independent set of size {want}"));
                }
                Ok(())
            }
        }
    }

    /// Attaches solver-found refinement witnesses, failing if none exist.
    pub fn with_found_witnesses(mut self) -> Result<Self, Error> {
        let want = self.k - 1;
        let clique = brute_force_clique(&self.graph, want, true)?
            .ok_or_else(|| Error::IllegalInstance {
                index: 0,
                reason: format!("no clique of size {want}"),
            })?;
        let independent = brute_force_clique(&self.graph.complement(), want, true)?
            .ok_or_else(|| Error::IllegalInstance {
                index: 0,
                reason: format!("no independent set of size {want}"),
            })?;
        self.witnesses = Some(RefinementWitnesses { clique, independent });
        Ok(self)
    }
}

/// The join of a (c-2)-clique with an independent set of size c-1; has both
/// clique and independence number exactly c-1, on 2c-3 vertices.
pub fn dummy_graph(c: usize) -> Result<Graph, Error> {
    if c < 2 {
        return Err(Error::ParameterTooSmall { name: "c", value: c, min: 2 });
    }
    Ok(Graph::complete(c - 2).join(&Graph::empty(c - 1)))
}

/// The per-instance block: the disjoint union of (G join D) and
/// (complement(G) join D), where D is the dummy graph with clique and
/// independence number k-1 (so a legal instance yields blocks whose clique
/// and independence numbers are at least 2k-2, and a yes instance pushes
/// both to 2k-1). Layout: G copy, its dummy, complement copy, its dummy.
pub fn local_graph(inst: &Instance) -> Result<Graph, Error> {
    if inst.k < 3 {
        return Err(Error::ParameterTooSmall { name: "k", value: inst.k, min: 3 });
    }
    let d = dummy_graph(inst.k)?;
    Ok(inst.graph.join(&d).disjoint_union(&inst.graph.complement().join(&d)))
}

/// The composed graph with its target parameter and block bookkeeping.
#[derive(Debug, Clone)]
pub struct EmbedResult {
    pub g_prime: Graph,
    pub k_prime: usize,
    /// Host vertex -> index of the instance assigned to it.
    pub assignment: Vec<usize>,
    /// Host vertex -> half-open vertex interval of its block in `g_prime`.
    pub block_ranges: Vec<(usize, usize)>,
}

/// Sidecar form of an embedding, for the CLI.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EmbedSidecar {
    pub k_prime: usize,
    pub assignment: Vec<usize>,
    pub block_ranges: Vec<(usize, usize)>,
}

impl EmbedResult {
    pub fn sidecar(&self) -> EmbedSidecar {
        EmbedSidecar {
            k_prime: self.k_prime,
            assignment: self.assignment.clone(),
            block_ranges: self.block_ranges.clone(),
        }
    }
}

/// Embeds the instances into the host: each host vertex v gets instance
/// v mod t (round-robin, so repeating instances covers every host vertex),
/// local blocks are fully connected exactly when their host vertices are
/// adjacent, and the target parameter is ell * (2k-2) + 1.
pub fn embed(host: &HostGraph, k: usize, instances: &[Instance]) -> Result<EmbedResult, Error> {
    if instances.is_empty() {
        return Err(Error::EmptyInstances);
    }
    if k < 3 {
        return Err(Error::ParameterTooSmall { name: "k", value: k, min: 3 });
    }
    for (index, inst) in instances.iter().enumerate() {
        if inst.k != k {
            return Err(Error::MixedParameters { a: k, b: inst.k });
        }
        if let Err(reason) = inst.check_refinement_legal() {
            return Err(Error::IllegalInstance { index, reason });
        }
    }
    let t = instances.len();
    let host_n = host.h.n();
    if t > host_n {
        return Err(Error::TooManyInstances { t, host: host_n });
    }

    let assignment: Vec<usize> = (0..host_n).map(|v| v % t).collect();
    let locals: Vec<Graph> = assignment
        .iter()
        .map(|&i| local_graph(&instances[i]))
        .collect::<Result<_, _>>()?;
    let offsets = Graph::block_offsets(&locals);
    let block_ranges = (0..host_n).map(|v| (offsets[v], offsets[v + 1])).collect();
    let g_prime = Graph::connect_by_pattern(&locals, &host.h)?;
    let k_prime = host.ell * (2 * k - 2) + 1;
    Ok(EmbedResult { g_prime, k_prime, assignment, block_ranges })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::host::{turan_complement_host, validate_host};
    use crate::solve::{clique_number, independence_number};

    fn no_instance_c5() -> Instance {
        Instance::new(Graph::cycle(5), 3).with_found_witnesses().unwrap()
    }

    fn yes_instance_k3_plus_isolated() -> Instance {
        let g = Graph::complete(3).disjoint_union(&Graph::empty(1));
        Instance::new(g, 3).with_found_witnesses().unwrap()
    }

    #[test]
    fn dummy_graph_examples() {
        let d2 = dummy_graph(2).unwrap();
        assert_eq!(d2.n(), 1);
        assert_eq!(clique_number(&d2), 1);
        assert_eq!(independence_number(&d2), 1);

        let d3 = dummy_graph(3).unwrap();
        assert_eq!(d3.n(), 3);
        assert_eq!(d3.edge_count(), 2); // the path K1 join I2
        assert_eq!(clique_number(&d3), 2);
        assert_eq!(independence_number(&d3), 2);

        let d5 = dummy_graph(5).unwrap();
        assert_eq!(d5.n(), 7);
        assert_eq!(clique_number(&d5), 4);
        assert_eq!(independence_number(&d5), 4);

        assert!(dummy_graph(1).is_err());
    }

    #[test]
    fn local_graph_no_instance() {
        let h = local_graph(&no_instance_c5()).unwrap();
        assert_eq!(h.n(), 16); // 2 * (5 + 2*3 - 3)
        assert_eq!(clique_number(&h), 4); // 2k - 2
        assert_eq!(independence_number(&h), 4);
    }

    #[test]
    fn local_graph_yes_instance() {
        let h = local_graph(&yes_instance_k3_plus_isolated()).unwrap();
        assert!(clique_number(&h) >= 5); // 2k - 1
        assert!(independence_number(&h) >= 5);
    }

    #[test]
    fn local_graph_rejects_small_k() {
        let inst = Instance::new(Graph::cycle(5), 2);
        assert!(local_graph(&inst).is_err());
    }

    #[test]
    fn local_graph_self_complement_symmetry() {
        // alpha of H_v equals omega of the construction on the complemented instance
        let inst = no_instance_c5();
        let comp_inst =
            Instance::new(inst.graph.complement(), 3).with_found_witnesses().unwrap();
        let h = local_graph(&inst).unwrap();
        let h_comp = local_graph(&comp_inst).unwrap();
        assert_eq!(independence_number(&h), clique_number(&h_comp));
    }

    #[test]
    fn embed_single_vertex_host() {
        let host = turan_complement_host(1);
        assert!(validate_host(&host).is_ok());

        let no = embed(&host, 3, &[no_instance_c5()]).unwrap();
        assert_eq!(no.k_prime, 5);
        assert_eq!(no.g_prime.n(), 16);
        let max_hom =
            clique_number(&no.g_prime).max(independence_number(&no.g_prime));
        assert_eq!(max_hom, 4);

        let yes = embed(&host, 3, &[yes_instance_k3_plus_isolated()]).unwrap();
        assert_eq!(yes.k_prime, 5);
        let max_hom =
            clique_number(&yes.g_prime).max(independence_number(&yes.g_prime));
        assert!(max_hom >= 5);
    }

    #[test]
    fn embed_four_no_instances_on_turan_host() {
        let host = turan_complement_host(4);
        let instances: Vec<Instance> = (0..4).map(|_| no_instance_c5()).collect();
        let out = embed(&host, 3, &instances).unwrap();
        assert_eq!(out.k_prime, 9);
        assert_eq!(out.g_prime.n(), 64); // 4 blocks of 2 * (5 + 2k - 3)
        let max_hom =
            clique_number(&out.g_prime).max(independence_number(&out.g_prime));
        assert_eq!(max_hom, 8);
    }

    #[test]
    fn embed_errors() {
        let host = turan_complement_host(1);
        assert!(matches!(embed(&host, 3, &[]), Err(Error::EmptyInstances)));
        let inst = Instance::new(Graph::cycle(5), 2);
        assert!(embed(&host, 2, &[inst]).is_err());
        let two = vec![no_instance_c5(), no_instance_c5()];
        assert!(matches!(
            embed(&host, 3, &two),
            Err(Error::TooManyInstances { t: 2, host: 1 })
        ));
        // illegal instance: K2 has no independent set of size 2
        let bad = Instance::new(Graph::complete(2), 3);
        assert!(matches!(
            embed(&host, 3, &[bad]),
            Err(Error::IllegalInstance { index: 0, .. })
        ));
    }

    #[test]
    fn embed_bookkeeping() {
        let host = turan_complement_host(4);
        let instances = vec![no_instance_c5(), yes_instance_k3_plus_isolated()];
        let out = embed(&host, 3, &instances).unwrap();
        assert_eq!(out.assignment, vec![0, 1, 0, 1]);
        // block sizes: 2 * (5 + 3) = 16 for the C5 instance, 2 * (4 + 3) = 14
        // for the 4-vertex yes instance
        assert_eq!(out.block_ranges[0], (0, 16));
        assert_eq!(out.block_ranges[1], (16, 30));
        assert_eq!(out.block_ranges[2], (30, 46));
        assert_eq!(out.block_ranges[3], (46, 60));
        assert_eq!(out.k_prime, host.ell * 4 + 1);
    }
}
