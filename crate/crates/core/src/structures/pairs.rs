//! Non-adjacent pairs with many common neighbours.

use crate::plane_graph::{members, Graph};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairCert {
    pub v: usize,
    pub x: usize,
    pub common: Vec<usize>,
}

impl PairCert {
    pub fn size(&self) -> usize {
        self.common.len()
    }

    pub fn is_valid_in(&self, g: &Graph) -> bool {
        self.v != self.x
            && !g.has_edge(self.v, self.x)
            && self.common.iter().all(|&c| g.has_edge(c, self.v) && g.has_edge(c, self.x))
    }
}

/// The non-adjacent pair with the most common neighbours, ties to the least
/// `(v, x)`; `None` when every pair is adjacent.
pub fn max_common_neighborhood_pair(g: &Graph) -> Option<PairCert> {
    let mut best: Option<(usize, usize, usize)> = None;
    for v in 0..g.n() {
        for x in (v + 1)..g.n() {
            if g.has_edge(v, x) {
                continue;
            }
            let c = g.common_neighbors(v, x).count_ones() as usize;
            if best.is_none_or(|(b, _, _)| c > b) {
                best = Some((c, v, x));
            }
        }
    }
    best.map(|(_, v, x)| PairCert { v, x, common: members(g.common_neighbors(v, x)).collect() })
}
