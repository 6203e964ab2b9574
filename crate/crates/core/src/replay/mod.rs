//! Executable versions of the cycle-family constructions: each step either emits
//! verified Hamiltonian cycles of the input graph or fails loudly.
//!
//! The asymptotic thresholds are vacuous below a few million vertices, so branch
//! choice follows the local structure instead (see [`ReplayConfig`]); every cycle
//! is still checked against the original graph before it is kept.

mod diamonds;
mod lemma_2edge;
mod region;
mod theorem1;
mod tree;

pub use diamonds::{classify_pair, diamond_of, disjoint_diamond_family, nested_chain, star_set, ChainLevel, Claim3Case, DiamondRegion, NestedChain};
pub use lemma_2edge::lemma_2edge_family;
pub use region::{PairRegion, RUN_LENGTH};
pub use theorem1::theorem1_family;
pub use tree::{theorem2_tree, CycleTree, LevelProfile, TreeNode, UniqueRun};

use crate::ham::{HamError, HamFamily};
use crate::indset::IndSetError;
use crate::plane_graph::{ChainError, EmbeddingError};
use crate::tutte::TutteError;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ReplayError {
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("search budget of {0} nodes exhausted")]
    Timeout(u64),
    #[error("diamonds {0} and {1} have overlapping interiors")]
    InteriorsOverlap(usize, usize),
    #[error("no vertex of S* is 3-adjacent to a separating 4-cycle")]
    EmptyStar,
    #[error("diamonds {0:?} and {1:?} break the intersection dichotomy")]
    Claim3Violated(Vec<usize>, Vec<usize>),
    #[error("chain broken at level {level}: {instance}")]
    ChainBroken { level: usize, instance: String },
    #[error("assertion {name} failed: {instance}")]
    AssertionFailed { name: String, instance: String },
    #[error(transparent)]
    Tutte(#[from] TutteError),
    #[error(transparent)]
    IndSet(#[from] IndSetError),
    #[error(transparent)]
    Embedding(#[from] EmbeddingError),
    #[error(transparent)]
    Ham(HamError),
}

impl From<HamError> for ReplayError {
    fn from(e: HamError) -> Self {
        match e {
            HamError::Timeout(n) => ReplayError::Timeout(n),
            other => ReplayError::Ham(other),
        }
    }
}

impl From<ChainError> for ReplayError {
    fn from(e: ChainError) -> Self {
        ReplayError::HypothesisViolated(format!("block chain: {e}"))
    }
}

pub(crate) fn hypothesis(msg: impl Into<String>) -> ReplayError {
    ReplayError::HypothesisViolated(msg.into())
}

pub(crate) fn failed(name: &str, instance: impl Serialize) -> ReplayError {
    ReplayError::AssertionFailed {
        name: name.to_string(),
        instance: serde_json::to_string(&instance).expect("instance serializes"),
    }
}

/// Knobs shared by the replays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct ReplayConfig {
    /// Cycles kept per family; `None` keeps everything the construction yields.
    pub max_cycles: Option<usize>,
    /// At or below this many vertices the recursion enumerates directly.
    pub base_n: usize,
    /// Tree nodes expanded before [`theorem2_tree`] stops and flags the tree partial.
    pub max_tree_nodes: usize,
}

impl Default for ReplayConfig {
    fn default() -> Self {
        ReplayConfig { max_cycles: None, base_n: 8, max_tree_nodes: 100_000 }
    }
}

impl ReplayConfig {
    pub(crate) fn room(&self, have: usize) -> bool {
        self.max_cycles.is_none_or(|cap| have < cap)
    }

    pub(crate) fn cap(&self) -> usize {
        self.max_cycles.unwrap_or(usize::MAX)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// Small graph: every Hamiltonian cycle meeting the constraints.
    Base,
    /// One cycle of `G - F` per edge family `F`.
    EdgeFamily,
    /// Contract the region of a common-neighbour pair and splice region paths back.
    PairSplice,
    /// A Tutte path outside the region times per-block path choices inside it.
    BigBlockProduct,
    /// Contract `u3 u4` inside a run of degree-4 joints, recurse, and lift.
    ContractRecurse,
    /// One Hamiltonian cycle of the contraction, one region path per diamond.
    DisjointDiamonds,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assertion {
    pub name: String,
    pub holds: bool,
}

/// One line of a replay log.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub depth: usize,
    pub n: usize,
    pub branch: Branch,
    pub sizes: BTreeMap<String, u64>,
    pub assertions: Vec<Assertion>,
}

impl LevelRecord {
    pub(crate) fn new(depth: usize, n: usize, branch: Branch) -> Self {
        LevelRecord { depth, n, branch, sizes: BTreeMap::new(), assertions: Vec::new() }
    }

    pub(crate) fn size(&mut self, key: &str, value: impl TryInto<u64>) {
        self.sizes.insert(key.to_string(), value.try_into().unwrap_or(u64::MAX));
    }

    /// Records the outcome and turns a failure into an error carrying `instance`.
    pub(crate) fn check(&mut self, name: &str, holds: bool, instance: impl FnOnce() -> serde_json::Value) -> Result<(), ReplayError> {
        self.assertions.push(Assertion { name: name.to_string(), holds });
        if holds {
            Ok(())
        } else {
            Err(failed(name, instance()))
        }
    }
}

/// A family together with the per-level log of how it was built.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Replay {
    pub family: HamFamily,
    pub log: Vec<LevelRecord>,
}

impl Replay {
    /// The log as line-delimited JSON, outermost level first.
    pub fn log_jsonl(&self) -> String {
        self.log.iter().map(|r| serde_json::to_string(r).expect("record serializes") + "\n").collect()
    }

    /// The branch taken at the top level.
    pub fn branch(&self) -> Option<Branch> {
        self.log.first().map(|r| r.branch)
    }
}
