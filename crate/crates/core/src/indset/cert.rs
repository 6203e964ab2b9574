//! Certified independent sets.

use crate::plane_graph::{bit, members, set_of, Graph, VSet};
use crate::structures::{
    cycles_of_length, find_diamonds, on_separating_4cycles, saturates, separating_cycles,
    three_adjacent_to_separating_4cycles, DiamondKind, SatObject,
};
use serde::{Deserialize, Serialize};

/// Saturation objects and separating-4-cycle masks of one graph, computed once.
#[derive(Clone, Debug)]
pub struct SaturationIndex {
    /// For each vertex, the union of all 4-cycles through it.
    pub on_4cycle: Vec<VSet>,
    pub on_5cycle: Vec<VSet>,
    /// Crucial-vertex sets of all diamond-6-cycles.
    pub diamond6_crucial: Vec<VSet>,
    pub on_sep4: VSet,
    pub adj3_sep4: VSet,
}

impl SaturationIndex {
    pub fn new(g: &Graph) -> Self {
        let spread = |k: usize| {
            let mut out = vec![0; g.n()];
            for c in cycles_of_length(g, k) {
                let s = set_of(c.iter().copied());
                for &v in &c {
                    out[v] |= s;
                }
            }
            out
        };
        SaturationIndex {
            on_4cycle: spread(4),
            on_5cycle: spread(5),
            diamond6_crucial: find_diamonds(g, DiamondKind::Diamond6).iter().map(|d| d.crucial_set()).collect(),
            on_sep4: on_separating_4cycles(g),
            adj3_sep4: three_adjacent_to_separating_4cycles(g),
        }
    }

    /// Some cycle of the given length holds two members of the independent set `s`.
    pub fn saturates_cycle(&self, s: VSet, k: usize) -> bool {
        let table = if k == 4 { &self.on_4cycle } else { &self.on_5cycle };
        members(s).any(|v| table[v] & s & !bit(v) != 0)
    }

    pub fn saturates_diamond6(&self, s: VSet) -> bool {
        self.diamond6_crucial.iter().any(|&c| (c & s).count_ones() >= 3)
    }
}

/// Properties verified for an independent set by a fresh scan.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetFlags {
    pub no_sat_4cycle: bool,
    pub no_sat_5cycle: bool,
    pub no_sat_diamond6: bool,
    pub no_vertex_on_sep4cycle: bool,
    pub no_vertex_3adj_sep4cycle: bool,
}

impl SetFlags {
    pub fn scan(index: &SaturationIndex, s: VSet) -> Self {
        SetFlags {
            no_sat_4cycle: !index.saturates_cycle(s, 4),
            no_sat_5cycle: !index.saturates_cycle(s, 5),
            no_sat_diamond6: !index.saturates_diamond6(s),
            no_vertex_on_sep4cycle: s & index.on_sep4 == 0,
            no_vertex_3adj_sep4cycle: s & index.adj3_sep4 == 0,
        }
    }

    pub fn all(&self) -> bool {
        self.no_sat_4cycle
            && self.no_sat_5cycle
            && self.no_sat_diamond6
            && self.no_vertex_on_sep4cycle
            && self.no_vertex_3adj_sep4cycle
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndSetCert {
    pub set: Vec<usize>,
    /// Largest degree in G of a member (0 for the empty set).
    pub max_degree: usize,
    pub flags: SetFlags,
    pub provenance: Vec<String>,
}

impl IndSetCert {
    /// Certifies `s`, which the caller guarantees to be independent.
    pub fn certify(g: &Graph, index: &SaturationIndex, s: VSet, provenance: Vec<String>) -> Self {
        debug_assert!(g.is_independent(s));
        IndSetCert {
            set: members(s).collect(),
            max_degree: members(s).map(|v| g.degree(v)).max().unwrap_or(0),
            flags: SetFlags::scan(index, s),
            provenance,
        }
    }

    pub fn mask(&self) -> VSet {
        set_of(self.set.iter().copied())
    }

    pub fn len(&self) -> usize {
        self.set.len()
    }

    pub fn is_empty(&self) -> bool {
        self.set.is_empty()
    }

    /// Re-derives every claimed field by scanning the objects one at a time,
    /// without the precomputed index.
    pub fn reverify(&self, g: &Graph) -> bool {
        let s = self.mask();
        if !g.is_independent(s) || self.max_degree != members(s).map(|v| g.degree(v)).max().unwrap_or(0) {
            return false;
        }
        let sat = |obj: SatObject| saturates(g, s, obj).expect("independent");
        let no_cycle = |k| cycles_of_length(g, k).iter().all(|c| !sat(SatObject::Cycle(c)));
        let no_d6 = find_diamonds(g, DiamondKind::Diamond6).iter().all(|d| !sat(SatObject::Diamond6(d)));
        let sep4 = separating_cycles(g, 4);
        let on = sep4.iter().all(|c| c.iter().all(|&v| s & bit(v) == 0));
        let adj3 = sep4.iter().all(|c| {
            let cs = set_of(c.iter().copied());
            members(s & !cs).all(|v| (g.adj(v) & cs).count_ones() < 3)
        });
        let fresh = SetFlags {
            no_sat_4cycle: no_cycle(4),
            no_sat_5cycle: no_cycle(5),
            no_sat_diamond6: no_d6,
            no_vertex_on_sep4cycle: on,
            no_vertex_3adj_sep4cycle: adj3,
        };
        fresh == self.flags
    }
}
