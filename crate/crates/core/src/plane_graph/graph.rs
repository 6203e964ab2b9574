//! Simple undirected graphs on at most 64 vertices, stored as adjacency bitsets.

use serde::{Deserialize, Serialize};

/// A set of vertices, one bit per vertex id.
pub type VSet = u64;

/// An undirected edge, always stored with the smaller endpoint first.
pub type Edge = (usize, usize);

pub const MAX_VERTICES: usize = 64;

/// Normalizes an edge so that the smaller endpoint comes first.
#[inline]
pub fn edge(u: usize, v: usize) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[inline]
pub fn bit(v: usize) -> VSet {
    1u64 << v
}

#[inline]
pub fn full_set(n: usize) -> VSet {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterates over the members of a vertex set in ascending order.
pub fn members(mut set: VSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let v = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(v)
        }
    })
}

pub fn set_of(vertices: impl IntoIterator<Item = usize>) -> VSet {
    vertices.into_iter().fold(0, |acc, v| acc | bit(v))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    adj: Vec<VSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices supported");
        Graph { adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = Edge>) -> Self {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VSet {
        full_set(self.n())
    }

    #[inline]
    pub fn adj(&self, v: usize) -> VSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u] & bit(v) != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "self-loop at {u}");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> {
        members(self.adj[v])
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// All edges in ascending lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for v in members(self.adj[u] & !full_set(u + 1)) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Vertices reachable from `start` using only vertices of `within`.
    pub fn reach(&self, start: VSet, within: VSet) -> VSet {
        let mut seen = start & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in members(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    pub fn components(&self, within: VSet) -> Vec<VSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while rest != 0 {
            let start = rest & rest.wrapping_neg();
            let comp = self.reach(start, within);
            out.push(comp);
            rest &= !comp;
        }
        out
    }

    /// Nonempty and connected on the vertex set `within`.
    pub fn is_connected_within(&self, within: VSet) -> bool {
        within != 0 && self.reach(within & within.wrapping_neg(), within) == within
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    pub fn without_edges<'a>(&self, edges: impl IntoIterator<Item = &'a Edge>) -> Graph {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.remove_edge(u, v);
        }
        g
    }

    /// Adjacency restricted to `within`; vertices outside keep their ids but lose all edges.
    pub fn restricted(&self, within: VSet) -> Graph {
        let adj = (0..self.n())
            .map(|v| if within & bit(v) != 0 { self.adj[v] & within } else { 0 })
            .collect();
        Graph { adj }
    }

    /// The subgraph induced by `within`, relabelled densely. Returns the graph and
    /// the map from new ids to old ids.
    pub fn induced(&self, within: VSet) -> (Graph, Vec<usize>) {
        let labels: Vec<usize> = members(within).collect();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::empty(labels.len());
        for (i, &v) in labels.iter().enumerate() {
            for w in members(self.adj[v] & within) {
                if index[w] > i {
                    g.add_edge(i, index[w]);
                }
            }
        }
        (g, labels)
    }

    pub fn is_independent(&self, set: VSet) -> bool {
        members(set).all(|v| self.adj[v] & set == 0)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> VSet {
        self.adj[u] & self.adj[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn members_roundtrip() {
        let s = set_of([0, 5, 63]);
        assert_eq!(members(s).collect::<Vec<_>>(), vec![0, 5, 63]);
        assert_eq!(full_set(64), u64::MAX);
    }

    #[test]
    fn components_of_two_paths() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]);
        assert_eq!(g.components(g.vertices()), vec![0b00111, 0b11000]);
        assert!(!g.is_connected());
        assert!(g.is_connected_within(0b111));
        assert!(!g.is_connected_within(0));
    }

    #[test]
    fn induced_relabels() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)]);
        let (h, labels) = g.induced(0b1110);
        assert_eq!(labels, vec![1, 2, 3]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
    }
}
