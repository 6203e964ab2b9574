//! From low-degree colour classes to special independent sets.

use super::cert::{IndSetCert, SaturationIndex};
use super::coloring::{largest_low_degree_class, DEFAULT_COLORING_BUDGET};
use super::IndSetError;
use crate::plane_graph::{bit, members, Graph, VSet};
use crate::structures::{max_common_neighborhood_pair, PairCert};
use serde::{Deserialize, Serialize};

/// Constants of the dichotomy. `c1 = 1 / C1_DENOMINATOR`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Thresholds {
    /// A non-adjacent pair with more than `t` common neighbours ends the search.
    pub t: usize,
}

impl Thresholds {
    pub const DIV_5CYCLE: u64 = 541;
    pub const DIV_DIAMOND: u64 = 301;
    pub const DIV_4CYCLE: u64 = 108;
    pub const DIV_COMMON: u64 = 9;
    pub const DIV_LOW_DEGREE: u64 = 12;
    pub const C1_DENOMINATOR: u64 = Self::DIV_4CYCLE * 16 * Self::DIV_5CYCLE * Self::DIV_DIAMOND * 2;

    /// `t = floor(16 log2 n)`. `log2` is exact at powers of two, the only place
    /// where the product can land on an integer.
    pub fn for_n(n: usize) -> Self {
        assert!(n >= 1);
        Thresholds { t: (16.0 * (n as f64).log2()).floor() as usize }
    }

    pub fn c1(&self) -> f64 {
        1.0 / Self::C1_DENOMINATOR as f64
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SaturationKind {
    #[serde(rename = "4cycle")]
    FourCycle,
    #[serde(rename = "5cycle")]
    FiveCycle,
    Diamond6,
}

impl SaturationKind {
    pub fn label(self) -> &'static str {
        match self {
            SaturationKind::FourCycle => "4cycle",
            SaturationKind::FiveCycle => "5cycle",
            SaturationKind::Diamond6 => "diamond6",
        }
    }
}

/// Greedy maximal subset of `cert` saturating nothing of `kind`, scanning ascending ids.
/// The provenance records `kind:in->out`.
pub fn filter_saturation(g: &Graph, index: &SaturationIndex, cert: &IndSetCert, kind: SaturationKind) -> IndSetCert {
    let mut kept: VSet = 0;
    for v in members(cert.mask()) {
        // inputs are independent, so a 4- or 5-cycle never holds three members
        let clash = match kind {
            SaturationKind::FourCycle => index.on_4cycle[v] & kept != 0,
            SaturationKind::FiveCycle => index.on_5cycle[v] & kept != 0,
            SaturationKind::Diamond6 => index.saturates_diamond6(kept | bit(v)),
        };
        if !clash {
            kept |= bit(v);
        }
    }
    let mut prov = cert.provenance.clone();
    prov.push(format!("{}:{}->{}", kind.label(), cert.len(), kept.count_ones()));
    IndSetCert::certify(g, index, kept, prov)
}

/// |out| / |in|, or 1 for an empty input.
pub fn achieved_ratio(input: &IndSetCert, output: &IndSetCert) -> f64 {
    if input.is_empty() {
        1.0
    } else {
        output.len() as f64 / input.len() as f64
    }
}

/// Largest colour class of a 4-colouring of the degree-at-most-6 vertices.
pub fn low_degree_independent_set(g: &Graph, index: &SaturationIndex, budget: u64) -> Result<IndSetCert, IndSetError> {
    let class = largest_low_degree_class(g, budget)?;
    let size = class.count_ones() as usize;
    if Thresholds::DIV_LOW_DEGREE as usize * size < g.n() {
        return Err(IndSetError::LowDegreeBound { size, n: g.n() });
    }
    Ok(IndSetCert::certify(g, index, class, vec![format!("low_degree:{size}")]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum SpecialSet {
    /// A non-adjacent pair with more than `t` common neighbours.
    Pair(PairCert),
    Set(IndSetCert),
}

impl SpecialSet {
    pub fn branch(&self) -> &'static str {
        match self {
            SpecialSet::Pair(_) => "pair",
            SpecialSet::Set(_) => "set",
        }
    }
}

fn big_pair(g: &Graph, t: usize) -> Option<PairCert> {
    max_common_neighborhood_pair(g).filter(|p| p.size() > t)
}

fn filtered(g: &Graph, index: &SaturationIndex, budget: u64) -> Result<IndSetCert, IndSetError> {
    let mut s = low_degree_independent_set(g, index, budget)?;
    for kind in [SaturationKind::FourCycle, SaturationKind::FiveCycle, SaturationKind::Diamond6] {
        s = filter_saturation(g, index, &s, kind);
    }
    Ok(s)
}

/// Dichotomy with `t = floor(16 log2 n)`: a pair with many common neighbours, or an
/// independent set with all five flags.
pub fn special_set(g: &Graph) -> Result<SpecialSet, IndSetError> {
    special_set_with(g, Thresholds::for_n(g.n()), DEFAULT_COLORING_BUDGET)
}

pub fn special_set_with(g: &Graph, th: Thresholds, budget: u64) -> Result<SpecialSet, IndSetError> {
    if let Some(p) = big_pair(g, th.t) {
        return Ok(SpecialSet::Pair(p));
    }
    let index = SaturationIndex::new(g);
    let s = filtered(g, &index, budget)?;
    let kept = s.mask() & !index.on_sep4 & !index.adj3_sep4;
    let mut prov = s.provenance.clone();
    prov.push(format!("sep4:{}->{}", s.len(), kept.count_ones()));
    Ok(SpecialSet::Set(IndSetCert::certify(g, &index, kept, prov)))
}

/// Variant for minimum degree at least 5 with a caller-chosen `t`; separating
/// 4-cycles are not removed, and the flags report what holds.
pub fn special_set_mindeg5(g: &Graph, t: usize) -> Result<SpecialSet, IndSetError> {
    if g.min_degree() < 5 {
        return Err(IndSetError::MinDegreeViolated(g.min_degree()));
    }
    if t < 2 {
        return Err(IndSetError::ThresholdTooSmall(t));
    }
    if let Some(p) = big_pair(g, t) {
        return Ok(SpecialSet::Pair(p));
    }
    let index = SaturationIndex::new(g);
    Ok(SpecialSet::Set(filtered(g, &index, DEFAULT_COLORING_BUDGET)?))
}
