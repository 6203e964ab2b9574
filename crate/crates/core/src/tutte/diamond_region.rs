//! Path counts between outer corners of a near triangulation around a degree-4 vertex
//! whose link sits in a diamond-4-cycle.

use super::two_paths::PathPair;
use super::{exhausted, hypothesis, TutteError};
use crate::ham::{count_ham_paths_within, for_each_ham_path_within, Constraints};
use crate::plane_graph::{bit, edge, members, set_of, Edge, NearTriangulation, VSet};
use crate::structures::{has_separating_triangle, DiamondCert, DiamondKind};
use serde::{Deserialize, Serialize};
use std::ops::ControlFlow;

/// How the diamond meets the outer cycle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiamondConfig {
    Disjoint,
    /// Two shared vertices, adjacent in neither the diamond nor the outer cycle, one crucial.
    OppositeWithCrucial,
    /// Two shared vertices, adjacent in both, neither crucial.
    SharedEdgeNoCrucial,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RegionBranch {
    /// Every corner pair has at least two paths.
    AllPairsTwo,
    /// Exactly one pair has a unique path.
    OneUniquePair,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub a: usize,
    pub b: usize,
    /// Hamiltonian `a`-`b` paths of `R - (C \ {a, b})`.
    pub count: u64,
    /// With one unique pair: two paths of this pair, neither containing both edges
    /// of the unique path at `z`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub avoiding: Option<PathPair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondRegionTable {
    pub config: DiamondConfig,
    pub branch: RegionBranch,
    pub pairs: Vec<PairEntry>,
    /// The unique path, when there is one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unique_path: Option<Vec<usize>>,
}

fn classify(nt: &NearTriangulation, d: &DiamondCert) -> Result<DiamondConfig, TutteError> {
    let g = nt.graph();
    let shared: Vec<usize> = members(d.vertex_set() & nt.outer_set()).collect();
    let crucial = d.crucial_set();
    let in_diamond = |a: usize, b: usize| d.edges().contains(&edge(a, b));
    let in_outer = |a: usize, b: usize| nt.outer_edges().contains(&edge(a, b));
    match shared.as_slice() {
        [] => Ok(DiamondConfig::Disjoint),
        &[a, b] => {
            let k = (crucial & (bit(a) | bit(b))).count_ones();
            if !in_diamond(a, b) && !in_outer(a, b) && k == 1 {
                Ok(DiamondConfig::OppositeWithCrucial)
            } else if in_diamond(a, b) && in_outer(a, b) && k == 0 {
                debug_assert!(g.has_edge(a, b));
                Ok(DiamondConfig::SharedEdgeNoCrucial)
            } else {
                Err(hypothesis("diamond meets the outer cycle in an excluded way"))
            }
        }
        _ => Err(hypothesis("diamond meets the outer cycle in more than two vertices")),
    }
}

/// For every pair of outer corners, the number of Hamiltonian paths between them once
/// the other two corners are deleted; with exactly one unique pair, two paths for each
/// other pair that never use both edges of the unique path at `z`.
pub fn diamond_region_paths(nt: &NearTriangulation, z: usize, d: &DiamondCert) -> Result<DiamondRegionTable, TutteError> {
    let g = nt.graph();
    let outer = nt.outer.clone();
    if outer.len() != 4 {
        return Err(hypothesis("outer cycle must have length 4"));
    }
    if has_separating_triangle(g) {
        return Err(hypothesis("separating triangle"));
    }
    let c = nt.outer_set();
    if z >= nt.n() || c & bit(z) != 0 || g.degree(z) != 4 {
        return Err(hypothesis("z must be an interior vertex of degree 4"));
    }
    let without_z = g.restricted(g.vertices() & !bit(z));
    if d.kind != DiamondKind::Diamond4 || d.vertex_set() & bit(z) != 0 || !d.is_valid_in(&without_z) {
        return Err(hypothesis("D' must be a diamond-4-cycle of R - z"));
    }
    let link = g.adj(z);
    let inner = d.inner_cycle().expect("diamond-4-cycle");
    let k = inner.len();
    let link_in_d = set_of(inner.iter().copied()) == link
        && (0..k).all(|i| d.edges().contains(&edge(inner[i], inner[(i + 1) % k])));
    if !link_in_d {
        return Err(hypothesis("the link of z is not the inner cycle of D'"));
    }
    let rest = g.vertices() & !c & !bit(z) & !link;
    if members(rest).any(|v| g.degree(v) < 5) {
        return Err(hypothesis("an interior vertex away from z has degree below 5"));
    }
    let config = classify(nt, d)?;

    let none = Constraints::none();
    let region = |a: usize, b: usize| -> VSet { g.vertices() & !(c & !bit(a) & !bit(b)) };
    let mut pairs = Vec::new();
    for i in 0..4 {
        for j in i + 1..4 {
            let (a, b) = (outer[i], outer[j]);
            let count = count_ham_paths_within(g, region(a, b), a, b, &none)?;
            pairs.push(PairEntry { a, b, count, avoiding: None });
        }
    }
    let unique: Vec<usize> = (0..pairs.len()).filter(|&i| pairs[i].count == 1).collect();
    if pairs.iter().any(|p| p.count == 0) || unique.len() > 1 {
        return Err(exhausted(("diamond_region_paths", g.edges(), &outer, z, d, &pairs)));
    }
    let Some(&ui) = unique.first() else {
        return Ok(DiamondRegionTable { config, branch: RegionBranch::AllPairsTwo, pairs, unique_path: None });
    };
    let (ua, ub) = (pairs[ui].a, pairs[ui].b);
    let mut p = Vec::new();
    for_each_ham_path_within(g, region(ua, ub), ua, ub, &none, |q| {
        p = q.to_vec();
        ControlFlow::Break(())
    })?;
    let at_z: Vec<Edge> = p.windows(2).map(|w| edge(w[0], w[1])).filter(|&(s, t)| s == z || t == z).collect();
    for (i, entry) in pairs.iter_mut().enumerate() {
        if i == ui {
            continue;
        }
        let (a, b) = (entry.a, entry.b);
        let mut found: Vec<Vec<usize>> = Vec::new();
        for_each_ham_path_within(g, region(a, b), a, b, &none, |q| {
            let uses_all = at_z.iter().all(|e| q.windows(2).any(|w| edge(w[0], w[1]) == *e));
            if !uses_all {
                found.push(q.to_vec());
            }
            if found.len() == 2 {
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        if found.len() < 2 {
            return Err(exhausted(("diamond_region_avoiding", g.edges(), &outer, z, d, a, b, &at_z)));
        }
        let second = found.pop().unwrap();
        let first = found.pop().unwrap();
        entry.avoiding = Some(PathPair { first, second, avoided: Some(at_z.clone()) });
    }
    Ok(DiamondRegionTable { config, branch: RegionBranch::OneUniquePair, pairs, unique_path: Some(p) })
}
