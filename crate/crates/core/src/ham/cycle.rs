//! Hamiltonian cycles as canonical vertex sequences, and deduplicated families.

use crate::plane_graph::{edge, set_of, Edge, Graph, VSet};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A cycle stored from its least vertex, in the direction whose second vertex is
/// smaller than its last. Two values are equal iff their edge sets are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HamCycle(Vec<usize>);

impl HamCycle {
    pub fn new(vertices: &[usize]) -> Self {
        let k = vertices.len();
        assert!(k >= 3, "a cycle needs at least 3 vertices");
        let (pos, _) = vertices.iter().enumerate().min_by_key(|&(_, v)| *v).unwrap();
        let fwd: Vec<usize> = (0..k).map(|i| vertices[(pos + i) % k]).collect();
        if fwd[1] < fwd[k - 1] {
            HamCycle(fwd)
        } else {
            let mut rev = vec![fwd[0]];
            rev.extend(fwd[1..].iter().rev());
            HamCycle(rev)
        }
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn edges(&self) -> Vec<Edge> {
        let k = self.0.len();
        let mut e: Vec<Edge> = (0..k).map(|i| edge(self.0[i], self.0[(i + 1) % k])).collect();
        e.sort_unstable();
        e
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        let k = self.0.len();
        (0..k).any(|i| edge(self.0[i], self.0[(i + 1) % k]) == edge(a, b))
    }

    /// Neighbours of `v` on the cycle.
    pub fn around(&self, v: usize) -> Option<(usize, usize)> {
        let k = self.0.len();
        let i = self.0.iter().position(|&x| x == v)?;
        Some((self.0[(i + k - 1) % k], self.0[(i + 1) % k]))
    }

    /// Visits every vertex of `within` exactly once using edges of `g`.
    pub fn is_hamiltonian_within(&self, g: &Graph, within: VSet) -> bool {
        let k = self.0.len();
        k >= 3
            && k == within.count_ones() as usize
            && set_of(self.0.iter().copied()) == within
            && (0..k).all(|i| g.has_edge(self.0[i], self.0[(i + 1) % k]))
    }

    pub fn is_hamiltonian_in(&self, g: &Graph) -> bool {
        self.is_hamiltonian_within(g, g.vertices())
    }
}

/// Checks that `path` is a Hamiltonian path of `g[within]`.
pub fn is_ham_path_within(g: &Graph, within: VSet, path: &[usize]) -> bool {
    !path.is_empty()
        && path.len() == within.count_ones() as usize
        && set_of(path.iter().copied()) == within
        && path.windows(2).all(|w| g.has_edge(w[0], w[1]))
}

/// Deduplicated Hamiltonian cycles with the construction that produced each.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HamFamily {
    pub source: String,
    cycles: BTreeMap<HamCycle, String>,
}

impl HamFamily {
    pub fn new(source: impl Into<String>) -> Self {
        HamFamily { source: source.into(), cycles: BTreeMap::new() }
    }

    /// Adds a cycle; returns false if it was already present (first provenance kept).
    pub fn insert(&mut self, cycle: HamCycle, provenance: impl Into<String>) -> bool {
        use std::collections::btree_map::Entry;
        match self.cycles.entry(cycle) {
            Entry::Vacant(e) => {
                e.insert(provenance.into());
                true
            }
            Entry::Occupied(_) => false,
        }
    }

    pub fn merge(&mut self, other: HamFamily) {
        for (c, p) in other.cycles {
            self.insert(c, p);
        }
    }

    pub fn len(&self) -> usize {
        self.cycles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cycles.is_empty()
    }

    pub fn contains(&self, c: &HamCycle) -> bool {
        self.cycles.contains_key(c)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&HamCycle, &str)> {
        self.cycles.iter().map(|(c, p)| (c, p.as_str()))
    }

    pub fn cycles(&self) -> impl Iterator<Item = &HamCycle> {
        self.cycles.keys()
    }

    /// Every member is a Hamiltonian cycle of `g`.
    pub fn all_hamiltonian_in(&self, g: &Graph) -> bool {
        self.cycles.keys().all(|c| c.is_hamiltonian_in(g))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rotation_and_direction() {
        let a = HamCycle::new(&[3, 1, 0, 2]);
        let b = HamCycle::new(&[0, 1, 3, 2]);
        assert_eq!(a, b);
        assert_eq!(a.vertices(), &[0, 1, 3, 2]);
        assert_eq!(a.edges(), vec![(0, 1), (0, 2), (1, 3), (2, 3)]);
        assert_eq!(a.around(3), Some((1, 2)));
    }

    #[test]
    fn family_dedupes() {
        let mut f = HamFamily::new("t");
        assert!(f.insert(HamCycle::new(&[0, 1, 2]), "a"));
        assert!(!f.insert(HamCycle::new(&[2, 1, 0]), "b"));
        assert_eq!(f.iter().next().unwrap().1, "a");
    }
}
