//! H-bridges: chords of H, and components of G - V(H) together with their edges to H.

use super::graph::{bit, edge, members, set_of, Edge, Graph, VSet};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bridge {
    /// Vertices of the bridge not in H (empty for a chord).
    pub inner: Vec<usize>,
    pub attachments: Vec<usize>,
    pub edges: Vec<Edge>,
}

impl Bridge {
    pub fn is_chord(&self) -> bool {
        self.inner.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeDecomposition {
    pub h_vertices: Vec<usize>,
    pub h_edges: Vec<Edge>,
    pub bridges: Vec<Bridge>,
}

/// Decomposes `E(G) \ E(H)` into H-bridges. `H` is given by its vertex set and
/// edge list; chords come first (ascending), then components in ascending order of
/// their smallest vertex.
pub fn bridges(g: &Graph, h_vertices: VSet, h_edges: &[Edge]) -> BridgeDecomposition {
    let h_set: BTreeSet<Edge> = h_edges.iter().map(|&(u, v)| edge(u, v)).collect();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if h_vertices & bit(u) != 0 && h_vertices & bit(v) != 0 && !h_set.contains(&(u, v)) {
            out.push(Bridge { inner: vec![], attachments: vec![u, v], edges: vec![(u, v)] });
        }
    }
    let rest = g.vertices() & !h_vertices;
    for comp in g.components(rest) {
        let mut attach: VSet = 0;
        let mut edges = Vec::new();
        for v in members(comp) {
            for w in g.neighbors(v) {
                if comp & bit(w) != 0 {
                    if v < w {
                        edges.push((v, w));
                    }
                } else {
                    attach |= bit(w);
                    edges.push(edge(v, w));
                }
            }
        }
        edges.sort_unstable();
        out.push(Bridge {
            inner: members(comp).collect(),
            attachments: members(attach).collect(),
            edges,
        });
    }
    BridgeDecomposition {
        h_vertices: members(h_vertices).collect(),
        h_edges: h_set.into_iter().collect(),
        bridges: out,
    }
}

/// Bridges of a path given as a vertex sequence.
pub fn path_bridges(g: &Graph, path: &[usize]) -> BridgeDecomposition {
    let edges: Vec<Edge> = path.windows(2).map(|w| edge(w[0], w[1])).collect();
    bridges(g, set_of(path.iter().copied()), &edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_hamiltonian_path_has_three_chords() {
        let k4 = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        let d = path_bridges(&k4, &[0, 1, 2, 3]);
        assert_eq!(d.bridges.len(), 3);
        assert!(d.bridges.iter().all(|b| b.is_chord() && b.attachments.len() == 2));
    }

    #[test]
    fn whole_graph_has_no_bridges() {
        let c4 = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)]);
        let d = bridges(&c4, 0b1111, &c4.edges());
        assert!(d.bridges.is_empty());
    }
}
