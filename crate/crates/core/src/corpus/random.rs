//! Random triangulations by diagonal flips.

use super::enumerate::GenerationError;
use super::filter::{CorpusFilter, GeneratorConfig};
use super::named::double_wheel;
use crate::plane_graph::{PlaneGraph, MAX_VERTICES};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::time::{Duration, Instant};

/// Flips between two filter checks once burn-in is over.
const THINNING: usize = 25;

/// Attempts one random flip; rejected proposals leave the graph unchanged.
fn random_flip(g: &PlaneGraph, rng: &mut ChaCha8Rng) -> Option<PlaneGraph> {
    let edges = g.graph().edges();
    let (u, v) = edges[rng.gen_range(0..edges.len())];
    g.flip(u, v).ok()
}

/// A triangulation on `n` vertices reached from the double wheel by random flips,
/// resampled until `filter` accepts. Reproducible per `seed`.
pub fn random_triangulation(
    n: usize,
    seed: u64,
    filter: &CorpusFilter,
    config: &GeneratorConfig,
) -> Result<PlaneGraph, GenerationError> {
    if n > MAX_VERTICES {
        return Err(GenerationError::BudgetExceeded { n, max: MAX_VERTICES });
    }
    if n < 6 {
        return Err(GenerationError::TooSmall(n));
    }
    if filter.is_impossible_for(n) {
        return Err(GenerationError::FilterUnsatisfiableTimeout { attempts: 0 });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = double_wheel(n).expect("n >= 6");
    for _ in 0..config.flip_burn_in {
        if let Some(h) = random_flip(&g, &mut rng) {
            g = h;
        }
    }
    let deadline = Instant::now() + Duration::from_millis(config.timeout_ms);
    let mut attempts = 0;
    loop {
        attempts += 1;
        if filter.accepts(&g) {
            return Ok(g);
        }
        if Instant::now() >= deadline {
            return Err(GenerationError::FilterUnsatisfiableTimeout { attempts });
        }
        for _ in 0..THINNING {
            if let Some(h) = random_flip(&g, &mut rng) {
                g = h;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::is_k_connected;

    #[test]
    fn four_connected_sample_is_reproducible() {
        let cfg = GeneratorConfig::default();
        let f = CorpusFilter::four_connected();
        let a = random_triangulation(10, 1, &f, &cfg).unwrap();
        let b = random_triangulation(10, 1, &f, &cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.is_triangulation());
        assert!(is_k_connected(a.graph(), 4));
    }

    #[test]
    fn impossible_filter_times_out() {
        let cfg = GeneratorConfig { timeout_ms: 50, ..GeneratorConfig::default() };
        let f = CorpusFilter::four_connected().with_min_degree(6);
        assert!(matches!(
            random_triangulation(8, 3, &f, &cfg),
            Err(GenerationError::FilterUnsatisfiableTimeout { .. })
        ));
    }
}
