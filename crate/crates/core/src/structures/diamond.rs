//! Diamond-4-cycles and diamond-6-cycles.
//!
//! A diamond-4-cycle is a 4-cycle `y v w x` plus a vertex `u` adjacent to `y`, `v`
//! and `x`; its crucial vertices are `u` and `y` (the two lying in two triangles).
//! A diamond-6-cycle has three hubs `k1 k2 k3` and, for each pair of hubs, an
//! adjacent pair of vertices both joined to both hubs of that pair; its crucial
//! vertices are those six degree-3 vertices. Matches are subgraphs, not necessarily
//! induced, and are reported once per edge set.

use crate::plane_graph::{bit, edge, members, Edge, Graph, VSet};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiamondKind {
    Diamond4,
    Diamond6,
}

/// A pattern graph over role indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Pattern {
    pub kind: DiamondKind,
    pub roles: Vec<String>,
    pub edges: Vec<Edge>,
    pub crucial: Vec<usize>,
    pub outer: Vec<usize>,
}

impl Pattern {
    pub fn of(kind: DiamondKind) -> Pattern {
        let names = |xs: &[&str]| xs.iter().map(|s| s.to_string()).collect();
        match kind {
            DiamondKind::Diamond4 => Pattern {
                kind,
                roles: names(&["u", "y", "v", "w", "x"]),
                edges: vec![(1, 2), (2, 3), (3, 4), (1, 4), (0, 1), (0, 2), (0, 4)],
                crucial: vec![0, 1],
                outer: vec![1, 2, 3, 4],
            },
            DiamondKind::Diamond6 => Pattern {
                kind,
                roles: names(&["k1", "k2", "k3", "a1", "a2", "b1", "b2", "c1", "c2"]),
                edges: vec![
                    (3, 4), (0, 3), (1, 3), (0, 4), (1, 4),
                    (5, 6), (1, 5), (2, 5), (1, 6), (2, 6),
                    (7, 8), (2, 7), (0, 7), (2, 8), (0, 8),
                ],
                crucial: vec![3, 4, 5, 6, 7, 8],
                outer: vec![0, 3, 1, 5, 2, 7],
            },
        }
    }

    pub fn size(&self) -> usize {
        self.roles.len()
    }

    fn adjacency(&self) -> Vec<VSet> {
        let mut adj = vec![0; self.size()];
        for &(a, b) in &self.edges {
            adj[a] |= bit(b);
            adj[b] |= bit(a);
        }
        adj
    }

    /// Roles in an order where each role after the first touches an earlier one.
    fn search_order(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut order = vec![0];
        let mut placed = bit(0);
        while order.len() < self.size() {
            let next = (0..self.size())
                .find(|&r| placed & bit(r) == 0 && adj[r] & placed != 0)
                .expect("pattern is connected");
            order.push(next);
            placed |= bit(next);
        }
        order
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DiamondCert {
    pub kind: DiamondKind,
    /// Graph vertex playing each pattern role, in role order.
    pub vertices: Vec<usize>,
    pub crucial: Vec<usize>,
    pub outer_cycle: Vec<usize>,
}

impl DiamondCert {
    fn from_assignment(p: &Pattern, vertices: Vec<usize>) -> Self {
        DiamondCert {
            kind: p.kind,
            crucial: p.crucial.iter().map(|&r| vertices[r]).collect(),
            outer_cycle: p.outer.iter().map(|&r| vertices[r]).collect(),
            vertices,
        }
    }

    pub fn crucial_set(&self) -> VSet {
        self.crucial.iter().fold(0, |acc, &v| acc | bit(v))
    }

    pub fn vertex_set(&self) -> VSet {
        self.vertices.iter().fold(0, |acc, &v| acc | bit(v))
    }

    pub fn edges(&self) -> Vec<Edge> {
        let p = Pattern::of(self.kind);
        let mut e: Vec<Edge> = p.edges.iter().map(|&(a, b)| edge(self.vertices[a], self.vertices[b])).collect();
        e.sort_unstable();
        e
    }

    /// True when every pattern edge is present in `g` and the roles are distinct.
    pub fn is_valid_in(&self, g: &Graph) -> bool {
        let p = Pattern::of(self.kind);
        self.vertices.len() == p.size()
            && self.vertex_set().count_ones() as usize == p.size()
            && self.vertices.iter().all(|&v| v < g.n())
            && p.edges.iter().all(|&(a, b)| g.has_edge(self.vertices[a], self.vertices[b]))
    }

    /// For a diamond-4-cycle `u y v w x`: the 4-cycle `u v w x`.
    pub fn inner_cycle(&self) -> Option<Vec<usize>> {
        match self.kind {
            DiamondKind::Diamond4 => {
                let r = &self.vertices;
                Some(vec![r[0], r[2], r[3], r[4]])
            }
            DiamondKind::Diamond6 => None,
        }
    }
}

/// All subgraphs of `g[within]` matching the pattern, one per edge set, each with
/// its lexicographically least role assignment; sorted by assignment.
pub fn find_diamonds_within(g: &Graph, kind: DiamondKind, within: VSet) -> Vec<DiamondCert> {
    let p = Pattern::of(kind);
    let padj = p.adjacency();
    let order = p.search_order();
    let k = p.size();
    if (within.count_ones() as usize) < k {
        return Vec::new();
    }
    let mut best: BTreeMap<Vec<Edge>, Vec<usize>> = BTreeMap::new();
    let mut assign = vec![usize::MAX; k];
    #[allow(clippy::too_many_arguments)]
    fn search(
        g: &Graph,
        p: &Pattern,
        padj: &[VSet],
        order: &[usize],
        depth: usize,
        within: VSet,
        used: VSet,
        assign: &mut Vec<usize>,
        best: &mut BTreeMap<Vec<Edge>, Vec<usize>>,
    ) {
        if depth == order.len() {
            let mut key: Vec<Edge> = p.edges.iter().map(|&(a, b)| edge(assign[a], assign[b])).collect();
            key.sort_unstable();
            best.entry(key)
                .and_modify(|cur| {
                    if *assign < *cur {
                        cur.clone_from(assign);
                    }
                })
                .or_insert_with(|| assign.clone());
            return;
        }
        let role = order[depth];
        let mut cand = within & !used;
        for r in members(padj[role]) {
            if assign[r] != usize::MAX {
                cand &= g.adj(assign[r]);
            }
        }
        let need = padj[role].count_ones() as usize;
        for v in members(cand) {
            if g.degree(v) < need {
                continue;
            }
            assign[role] = v;
            search(g, p, padj, order, depth + 1, within, used | bit(v), assign, best);
        }
        assign[role] = usize::MAX;
    }
    search(g, &p, &padj, &order, 0, within, 0, &mut assign, &mut best);
    let mut out: Vec<DiamondCert> =
        best.into_values().map(|a| DiamondCert::from_assignment(&p, a)).collect();
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out
}

pub fn find_diamonds(g: &Graph, kind: DiamondKind) -> Vec<DiamondCert> {
    find_diamonds_within(g, kind, g.vertices())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{double_wheel, k4, octahedron};

    #[test]
    fn pattern_shapes() {
        let d4 = Pattern::of(DiamondKind::Diamond4);
        let adj = d4.adjacency();
        let deg: Vec<u32> = adj.iter().map(|a| a.count_ones()).collect();
        assert_eq!(deg, vec![3, 3, 3, 2, 3]);
        // crucial: degree 3 and not adjacent to the degree-2 role
        assert_eq!(d4.crucial, vec![0, 1]);
        let d6 = Pattern::of(DiamondKind::Diamond6);
        assert_eq!(d6.edges.len(), 15);
        let deg6: Vec<u32> = d6.adjacency().iter().map(|a| a.count_ones()).collect();
        assert_eq!(deg6, vec![4, 4, 4, 3, 3, 3, 3, 3, 3]);
    }

    #[test]
    fn small_graphs() {
        assert!(find_diamonds(k4().graph(), DiamondKind::Diamond6).is_empty());
        let o = find_diamonds(octahedron().graph(), DiamondKind::Diamond4);
        assert!(!o.is_empty());
        assert!(o.iter().all(|d| d.is_valid_in(octahedron().graph())));
        let dw = double_wheel(8).unwrap();
        for d in find_diamonds(dw.graph(), DiamondKind::Diamond4) {
            assert!(d.is_valid_in(dw.graph()));
            assert_eq!(d.crucial.len(), 2);
        }
    }
}
