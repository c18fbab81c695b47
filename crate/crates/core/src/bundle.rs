//! JSON bundle and sidecar formats used by the CLI: instance bundles
//! (graphs by path or inline edge list, with optional witnesses), host
//! cover sidecars, and instance sidecars. Vertex indices in JSON are
//! 0-based; DIMACS files stay 1-based.

use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::construct::{Instance, RefinementWitnesses};
use crate::dimacs;
use crate::error::Error;
use crate::graph::{Graph, VertexSet};
use crate::host::HostGraph;

#[derive(Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphSource {
    /// Path to a DIMACS file, relative to the bundle file.
    Path(PathBuf),
    /// Inline edge list.
    Inline { n: usize, edges: Vec<(usize, usize)> },
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BundleInstance {
    pub graph: GraphSource,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clique_witness: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub indep_witness: Option<Vec<usize>>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct Bundle {
    pub k: usize,
    pub instances: Vec<BundleInstance>,
}

impl Bundle {
    pub fn load(path: &Path) -> Result<Vec<Instance>, Error> {
        let bundle: Bundle = serde_json::from_reader(BufReader::new(File::open(path)?))?;
        let base = path.parent().unwrap_or(Path::new("."));
        bundle
            .instances
            .into_iter()
            .map(|bi| {
                let graph = match bi.graph {
                    GraphSource::Path(p) => {
                        let full = if p.is_absolute() { p } else { base.join(p) };
                        dimacs::parse(BufReader::new(File::open(full)?))?
                    }
                    GraphSource::Inline { n, edges } => Graph::from_edges(n, &edges)?,
                };
                let witnesses = match (bi.clique_witness, bi.indep_witness) {
                    (Some(c), Some(i)) => Some(RefinementWitnesses {
                        clique: VertexSet::new(c),
                        independent: VertexSet::new(i),
                    }),
                    _ => None,
                };
                Ok(Instance { graph, k: bundle.k, witnesses })
            })
            .collect()
    }
}

/// Sidecar written next to a host graph's DIMACS file.
#[derive(Debug, Serialize, Deserialize)]
pub struct HostSidecar {
    pub ell: usize,
    pub cover: Vec<Vec<usize>>,
    pub strategy: String,
}

impl HostSidecar {
    pub fn of(host: &HostGraph, strategy: &str) -> Self {
        HostSidecar {
            ell: host.ell,
            cover: host.cover.iter().map(|s| s.members().to_vec()).collect(),
            strategy: strategy.to_string(),
        }
    }
}

/// Sidecar written next to an instance's DIMACS file.
#[derive(Debug, Serialize, Deserialize)]
pub struct InstanceSidecar {
    pub k: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witnesses: Option<WitnessSidecar>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct WitnessSidecar {
    pub clique: Vec<usize>,
    pub independent: Vec<usize>,
}

impl InstanceSidecar {
    pub fn of(inst: &Instance) -> Self {
        InstanceSidecar {
            k: inst.k,
            witnesses: inst.witnesses.as_ref().map(|w| WitnessSidecar {
                clique: w.clique.members().to_vec(),
                independent: w.independent.members().to_vec(),
            }),
        }
    }
}
