//! Tutte paths and the two-Hamiltonian-paths constructions built on them.
//!
//! Searches here look for objects whose existence is a theorem. When one comes back
//! empty the error carries the serialized instance: that is a counterexample alarm.

mod diamond_region;
mod paths;
mod region;
mod triangles;
mod two_paths;
mod verify;

pub use diamond_region::{diamond_region_paths, DiamondConfig, DiamondRegionTable, PairEntry, RegionBranch};
pub use paths::{tutte_path, tutte_path_two_edges, TUTTE_SEARCH_BUDGET};
pub use region::{outer_walk, outer_walk_within};
pub use triangles::{ham_cycle_through_triangle_edges, TriangleCycle};
pub use two_paths::{two_ham_paths_uv, two_ham_paths_uv_roles, two_ham_paths_uw, two_ham_paths_uw_roles, OuterPlanarWitness, PathPair, PathWitness, UvOutcome, UwOutcome};
pub use verify::{verify_tutte, TuttePathCert};

use crate::ham::HamError;
use crate::plane_graph::{Bridge, EmbeddingError};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TutteError {
    #[error("bridge with inner vertices {:?} has {attachments} attachments", bridge.inner)]
    Violation { bridge: Bridge, attachments: usize },
    #[error("not a path of the graph: {0:?}")]
    NotAPath(Vec<usize>),
    #[error("search found nothing for an instance where a solution must exist: {instance}")]
    SearchExhausted { instance: String },
    #[error("u, e, f, v are not in clockwise order on the outer cycle")]
    BadOrder,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("path search budget of {0} nodes exhausted")]
    Timeout(u64),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Ham(#[from] HamError),
}

pub(crate) fn hypothesis(msg: impl Into<String>) -> TutteError {
    TutteError::HypothesisViolated(msg.into())
}

pub(crate) fn exhausted(instance: impl serde::Serialize) -> TutteError {
    TutteError::SearchExhausted { instance: serde_json::to_string(&instance).expect("instance serializes") }
}
