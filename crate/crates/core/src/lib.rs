//! A toolkit around embedding many same-parameter clique-or-independent-set
//! instances into a single host graph: graph combinators, an exact
//! clique/independent-set solver, exact small Ramsey numbers, the two
//! classical reductions, host-graph search strategies, the composition
//! pipeline, and a brute-force verification harness.

pub mod bundle;
pub mod compose;
pub mod construct;
pub mod dimacs;
pub mod error;
pub mod graph;
pub mod harness;
pub mod host;
pub mod ramsey;
pub mod reduce;
pub mod solve;

pub use compose::{compose, small_k_solve, ComposeOutput, Strategy};
pub use construct::{dummy_graph, embed, local_graph, EmbedResult, Instance, RefinementWitnesses};
pub use error::Error;
pub use graph::{Graph, VertexSet};
pub use harness::{
    blowup_report, gen_refinement_instance, verify_composition, Target, VerificationReport,
};
pub use host::{
    paley, random_host, turan_complement_host, validate_host, witness_host, HostGraph,
};
pub use ramsey::{
    compute_ramsey_exhaustive, erdos_lower_bound, ramsey_gap, spencer_lower_estimate,
    verify_ramsey_witness, GapResult, Provenance, RamseyTable,
};
pub use reduce::{clique_to_ramsey, ramsey_to_refinement};
pub use solve::{
    brute_force_homogeneous, has_homogeneous, max_clique, max_independent_set,
    HomogeneousWitness, WitnessKind,
};
