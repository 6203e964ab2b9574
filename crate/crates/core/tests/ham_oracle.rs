mod common;

use common::{brute_cycles, dp_cycle_count, dp_path_count};
use hamforge::corpus::{double_wheel, icosahedron, octahedron, random_triangulation, CorpusFilter, GeneratorConfig};
use hamforge::ham::{count_ham_cycles, count_ham_paths, enumerate_ham_cycles, Constraints, HamCycle};
use proptest::prelude::*;

/// Frozen from `dp_cycle_count` on the icosahedron.
const ICOSAHEDRON_HAM_CYCLES: u64 = 1280;

#[test]
fn icosahedron_count_matches_frozen_oracle() {
    let g = icosahedron();
    assert_eq!(dp_cycle_count(g.graph()), ICOSAHEDRON_HAM_CYCLES);
    assert_eq!(count_ham_cycles(g.graph(), &Constraints::none()), Ok(ICOSAHEDRON_HAM_CYCLES));
}

#[test]
fn octahedron_antipodal_paths() {
    let g = octahedron();
    // rim 0..=3; 0 and 2 are antipodal
    assert_eq!(count_ham_paths(g.graph(), 0, 2).unwrap(), dp_path_count(g.graph(), 0, 2));
    assert_eq!(count_ham_paths(g.graph(), 4, 5).unwrap(), dp_path_count(g.graph(), 4, 5));
}

#[test]
fn double_wheel_counts_agree_with_dp() {
    for n in 6..=11 {
        let g = double_wheel(n).unwrap();
        assert_eq!(count_ham_cycles(g.graph(), &Constraints::none()).unwrap(), dp_cycle_count(g.graph()));
    }
}

#[test]
fn edge_incidence_sum_is_count_times_n() {
    let g = icosahedron();
    let g = g.graph();
    let total: u64 = g
        .edges()
        .iter()
        .map(|&e| count_ham_cycles(g, &Constraints::requiring(&[e])).unwrap())
        .sum();
    assert_eq!(total, ICOSAHEDRON_HAM_CYCLES * 12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn search_matches_brute_force(n in 6usize..=9, seed in any::<u64>()) {
        let cfg = GeneratorConfig { flip_burn_in: 200, ..GeneratorConfig::default() };
        let g = random_triangulation(n, seed, &CorpusFilter::any(), &cfg).unwrap();
        let g = g.graph();
        let brute = brute_cycles(g);
        prop_assert_eq!(count_ham_cycles(g, &Constraints::none()).unwrap(), brute.len() as u64);
        let fam = enumerate_ham_cycles(g, usize::MAX, &Constraints::none()).unwrap();
        let listed: Vec<Vec<(usize, usize)>> = fam.cycles().map(HamCycle::edges).collect();
        let mut sorted = listed.clone();
        sorted.sort();
        let mut expect = brute.clone();
        expect.sort();
        prop_assert_eq!(sorted, expect);
        // constrained counts against filtering the brute-force list
        let edges = g.edges();
        let (e, f) = (edges[seed as usize % edges.len()], edges[(seed as usize / 7) % edges.len()]);
        if e != f {
            let req = brute.iter().filter(|c| c.contains(&e) && c.contains(&f)).count() as u64;
            prop_assert_eq!(count_ham_cycles(g, &Constraints::requiring(&[e, f])).unwrap(), req);
            let forb = brute.iter().filter(|c| c.contains(&e) && !c.contains(&f)).count() as u64;
            let c = Constraints { required: vec![e], forbidden: vec![f], budget: None };
            prop_assert_eq!(count_ham_cycles(g, &c).unwrap(), forb);
        }
        for a in 0..n {
            for b in (a + 1)..n {
                prop_assert_eq!(count_ham_paths(g, a, b).unwrap(), dp_path_count(g, a, b));
            }
        }
    }
}
