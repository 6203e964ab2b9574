//! Checking the Tutte property of a path.

use super::TutteError;
use crate::plane_graph::{edge, path_bridges, BridgeDecomposition, Edge, Graph};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A path all of whose bridges have at most three attachments, and at most two when
/// the bridge holds an edge of the designated subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TuttePathCert {
    pub path: Vec<usize>,
    pub designated: Vec<Edge>,
    pub bridges: BridgeDecomposition,
    /// Attachment count of each bridge, in bridge order.
    pub attachments: Vec<usize>,
}

impl TuttePathCert {
    /// Covers every vertex of `g` that has an edge.
    pub fn is_hamiltonian_in(&self, g: &Graph) -> bool {
        self.path.len() == (0..g.n()).filter(|&v| g.degree(v) > 0).count()
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        self.path.windows(2).any(|w| edge(w[0], w[1]) == edge(a, b))
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.path.windows(2).map(|w| edge(w[0], w[1])).collect()
    }
}

/// Checks that `path` is a simple path of `g` and that it is Tutte relative to the
/// designated edge set. Vertices of `g` with no edges are ignored.
pub fn verify_tutte(g: &Graph, path: &[usize], designated: &[Edge]) -> Result<TuttePathCert, TutteError> {
    let mut seen = BTreeSet::new();
    let simple = !path.is_empty()
        && path.iter().all(|&v| v < g.n() && seen.insert(v))
        && path.windows(2).all(|w| g.has_edge(w[0], w[1]));
    if !simple {
        return Err(TutteError::NotAPath(path.to_vec()));
    }
    let live = (0..g.n()).filter(|&v| g.degree(v) > 0 || path.contains(&v)).fold(0, |a, v| a | crate::plane_graph::bit(v));
    let restricted = g.restricted(live);
    let dec = path_bridges(&restricted, path);
    let marked: BTreeSet<Edge> = designated.iter().map(|&(a, b)| edge(a, b)).collect();
    let mut attachments = Vec::with_capacity(dec.bridges.len());
    for b in &dec.bridges {
        let k = b.attachments.len();
        let cap = if b.edges.iter().any(|e| marked.contains(e)) { 2 } else { 3 };
        if k > cap {
            return Err(TutteError::Violation { bridge: b.clone(), attachments: k });
        }
        attachments.push(k);
    }
    Ok(TuttePathCert { path: path.to_vec(), designated: marked.into_iter().collect(), bridges: dec, attachments })
}
