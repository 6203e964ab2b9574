mod common;

use common::brute_k_connected;
use hamforge::corpus::planar_code::{decode, encode};
use hamforge::corpus::{double_wheel, enumerate_range, random_triangulation, CorpusFilter, GeneratorConfig, DEFAULT_MAX_N};
use hamforge::plane_graph::{canonical_code, is_k_connected, same_up_to_mirror, vertex_connectivity, PlaneGraph};
use proptest::prelude::*;
use std::collections::BTreeSet;

/// Every triangulation on `n` vertices, up to mirroring, by breadth-first search over
/// diagonal flips from the double wheel (flips connect all triangulations of a size).
fn flip_closure(n: usize) -> Vec<PlaneGraph> {
    let start = double_wheel(n).unwrap();
    let mut seen = BTreeSet::from([canonical_code(&start, true)]);
    let mut queue = vec![start];
    let mut i = 0;
    while i < queue.len() {
        let g = queue[i].clone();
        i += 1;
        for (u, v) in g.graph().edges() {
            let Ok(h) = g.flip(u, v) else { continue };
            if seen.insert(canonical_code(&h, true)) {
                queue.push(h);
            }
        }
    }
    queue
}

#[test]
fn enumeration_matches_flip_closure() {
    let levels = enumerate_range(6, 9, &CorpusFilter::any(), DEFAULT_MAX_N).unwrap();
    for (level, n) in levels.iter().zip(6..) {
        let oracle = flip_closure(n);
        assert_eq!(level.len(), oracle.len(), "n = {n}");
        let got: BTreeSet<_> = level.iter().map(|g| canonical_code(g, true)).collect();
        let want: BTreeSet<_> = oracle.iter().map(|g| canonical_code(g, true)).collect();
        assert_eq!(got, want, "n = {n}");
    }
}

#[test]
fn four_connected_filter_matches_brute_connectivity() {
    let filter = CorpusFilter::four_connected();
    let levels = enumerate_range(6, 10, &filter, DEFAULT_MAX_N).unwrap();
    for (level, n) in levels.iter().zip(6..) {
        let want = flip_closure(n).into_iter().filter(|g| brute_k_connected(g.graph(), 4)).count();
        assert_eq!(level.len(), want, "n = {n}");
    }
}

#[test]
fn connectivity_agrees_with_vertex_cut_search() {
    for level in enumerate_range(5, 8, &CorpusFilter::any(), DEFAULT_MAX_N).unwrap() {
        for pg in &level {
            let g = pg.graph();
            let k = vertex_connectivity(g);
            assert!(brute_k_connected(g, k) && !brute_k_connected(g, k + 1));
            for j in 1..=6 {
                assert_eq!(is_k_connected(g, j), brute_k_connected(g, j));
            }
        }
    }
}

#[test]
fn planar_code_corpus_round_trip() {
    let level = enumerate_range(9, 9, &CorpusFilter::any(), DEFAULT_MAX_N).unwrap().remove(0);
    let back = decode(&encode(&level)).unwrap();
    assert_eq!(back.len(), level.len());
    assert!(back.iter().zip(&level).all(|(a, b)| a == b));
}

fn config() -> GeneratorConfig {
    GeneratorConfig { max_n: 20, flip_burn_in: 200, timeout_ms: 5000 }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_triangulations_satisfy_euler(n in 6usize..=16, seed in any::<u64>()) {
        let pg = random_triangulation(n, seed, &CorpusFilter::any(), &config()).unwrap();
        prop_assert!(pg.is_triangulation());
        prop_assert_eq!(pg.edge_count(), 3 * n - 6);
        prop_assert_eq!(pg.faces().len(), 2 * n - 4);
        let degrees: usize = (0..n).map(|v| pg.graph().degree(v)).sum();
        prop_assert_eq!(degrees, 2 * pg.edge_count());
    }

    #[test]
    fn canonical_code_ignores_relabelling(n in 6usize..=14, seed in any::<u64>(), shift in 1usize..13) {
        let pg = random_triangulation(n, seed, &CorpusFilter::any(), &config()).unwrap();
        let perm: Vec<usize> = (0..n).map(|v| (v + shift) % n).collect();
        let rotation = (0..n)
            .map(|v| {
                let old = perm.iter().position(|&p| p == v).unwrap();
                pg.rotation(old).iter().map(|&w| perm[w]).collect()
            })
            .collect();
        let relabelled = PlaneGraph::from_rotation(rotation).unwrap();
        prop_assert_eq!(canonical_code(&pg, false), canonical_code(&relabelled, false));
        prop_assert!(same_up_to_mirror(&pg.mirror(), &relabelled));
    }
}
