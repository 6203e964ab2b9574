//! Corpus filters and generator budgets.

use crate::plane_graph::{is_k_connected, PlaneGraph};
use crate::structures::separating_cycles;
use serde::{Deserialize, Serialize};
use std::ops::RangeInclusive;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FilterError {
    #[error("min_connectivity must be 3, 4 or 5, got {0}")]
    BadConnectivity(usize),
    #[error("empty vertex range {0}..={1}")]
    EmptyRange(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusFilter {
    min_connectivity: usize,
    min_degree: usize,
    max_separating_4cycles: Option<usize>,
    n_min: usize,
    n_max: usize,
}

impl Default for CorpusFilter {
    fn default() -> Self {
        CorpusFilter { min_connectivity: 3, min_degree: 3, max_separating_4cycles: None, n_min: 4, n_max: 64 }
    }
}

impl CorpusFilter {
    pub fn new(
        min_connectivity: usize,
        min_degree: usize,
        max_separating_4cycles: Option<usize>,
        n_range: RangeInclusive<usize>,
    ) -> Result<Self, FilterError> {
        if !(3..=5).contains(&min_connectivity) {
            return Err(FilterError::BadConnectivity(min_connectivity));
        }
        let (lo, hi) = (*n_range.start(), *n_range.end());
        if lo > hi {
            return Err(FilterError::EmptyRange(lo, hi));
        }
        Ok(CorpusFilter { min_connectivity, min_degree, max_separating_4cycles, n_min: lo, n_max: hi })
    }

    /// Every triangulation.
    pub fn any() -> Self {
        Self::default()
    }

    pub fn four_connected() -> Self {
        CorpusFilter { min_connectivity: 4, min_degree: 4, ..Self::default() }
    }

    pub fn with_min_degree(mut self, d: usize) -> Self {
        self.min_degree = d;
        self
    }

    pub fn with_max_separating_4cycles(mut self, k: usize) -> Self {
        self.max_separating_4cycles = Some(k);
        self
    }

    pub fn min_connectivity(&self) -> usize {
        self.min_connectivity
    }

    pub fn min_degree(&self) -> usize {
        self.min_degree
    }

    pub fn n_range(&self) -> RangeInclusive<usize> {
        self.n_min..=self.n_max
    }

    /// The class is empty for planar graphs regardless of sampling effort.
    pub fn is_impossible_for(&self, n: usize) -> bool {
        // average degree of a triangulation is 6 - 12/n
        !self.n_range().contains(&n)
            || self.min_degree >= 6
            || self.min_connectivity > 5
            || (self.min_degree == 5 && n < 12)
    }

    pub fn accepts(&self, g: &PlaneGraph) -> bool {
        let graph = g.graph();
        self.n_range().contains(&g.n())
            && graph.min_degree() >= self.min_degree
            && is_k_connected(graph, self.min_connectivity)
            && self
                .max_separating_4cycles
                .is_none_or(|k| separating_cycles(graph, 4).len() <= k)
    }
}

/// Generator budgets, loadable from TOML with keys `max_n`, `flip_burn_in`, `timeout_ms`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct GeneratorConfig {
    pub max_n: usize,
    pub flip_burn_in: usize,
    pub timeout_ms: u64,
}

impl Default for GeneratorConfig {
    fn default() -> Self {
        GeneratorConfig { max_n: 14, flip_burn_in: 2000, timeout_ms: 10_000 }
    }
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config: {0}")]
    Io(#[from] std::io::Error),
    #[error("bad config: {0}")]
    Parse(#[from] toml::de::Error),
}

impl GeneratorConfig {
    pub fn from_toml(text: &str) -> Result<Self, ConfigError> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        Self::from_toml(&std::fs::read_to_string(path)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::named::{double_wheel, icosahedron, k4};

    #[test]
    #[allow(clippy::reversed_empty_ranges)]
    fn filter_contract() {
        assert_eq!(CorpusFilter::new(2, 3, None, 4..=10), Err(FilterError::BadConnectivity(2)));
        assert_eq!(CorpusFilter::new(4, 4, None, 9..=8), Err(FilterError::EmptyRange(9, 8)));
        let f = CorpusFilter::four_connected();
        assert!(!f.accepts(&k4()));
        assert!(f.accepts(&double_wheel(8).unwrap()));
        assert!(!f.clone().with_max_separating_4cycles(8).accepts(&double_wheel(8).unwrap()));
        assert!(f.with_min_degree(5).accepts(&icosahedron()));
    }

    #[test]
    fn config_from_toml() {
        let c = GeneratorConfig::from_toml("max_n = 12\ntimeout_ms = 5").unwrap();
        assert_eq!(c, GeneratorConfig { max_n: 12, flip_burn_in: 2000, timeout_ms: 5 });
        assert!(GeneratorConfig::from_toml("max_nn = 1").is_err());
    }
}
