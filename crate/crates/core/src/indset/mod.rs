//! Certified independent sets, the special-set dichotomy and edge-deletion families.

mod cert;
mod coloring;
mod families;
mod pipeline;

pub use cert::{IndSetCert, SaturationIndex, SetFlags};
pub use coloring::{four_color_within, largest_low_degree_class, low_degree_vertices, DEFAULT_COLORING_BUDGET};
pub use families::{
    check_hypotheses, edge_families, ham_family_from_edge_families, three_halves_bound, EdgeFamilies, EdgeFamily,
    FamilyReport, Hypothesis,
};
pub use pipeline::{
    achieved_ratio, filter_saturation, low_degree_independent_set, special_set, special_set_mindeg5,
    special_set_with, SaturationKind, SpecialSet, Thresholds,
};

use crate::ham::HamError;
use crate::plane_graph::Edge;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IndSetError {
    #[error("4-colouring gave up after {0} search nodes")]
    ColoringTimeout(u64),
    #[error("the low-degree subgraph has no 4-colouring")]
    NotFourColorable,
    #[error("largest colour class has {size} vertices, below n/12 for n = {n}")]
    LowDegreeBound { size: usize, n: usize },
    #[error("minimum degree is {0}, need at least 5")]
    MinDegreeViolated(usize),
    #[error("threshold t = {0} is below 2")]
    ThresholdTooSmall(usize),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(Hypothesis),
    #[error("G - F is not 4-connected for F = {0:?}")]
    FourConnectivityLost(Vec<Edge>),
    #[error("G - F has no Hamiltonian cycle for F = {0:?}")]
    NoHamiltonianCycle(Vec<Edge>),
    #[error("a cycle was chosen by {got} families, more than {bound}")]
    MultiplicityExceeded { got: u64, bound: u64 },
    #[error("only {got} distinct cycles, below the bound {bound}")]
    FamilyTooSmall { got: usize, bound: u128 },
    #[error(transparent)]
    Ham(#[from] HamError),
}
