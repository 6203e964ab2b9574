mod common;

use common::{brute_cycles, dp_cycle_count, dp_path_count, set};
use hamforge::corpus::{double_wheel, enumerate_triangulations, icosahedron, octahedron, random_triangulation, CorpusFilter, GeneratorConfig};
use hamforge::ham::HamFamily;
use hamforge::plane_graph::{bit, edge, members, Edge, Graph, PlaneGraph};
use hamforge::replay::{
    classify_pair, diamond_of, disjoint_diamond_family, lemma_2edge_family, nested_chain, theorem1_family, theorem2_tree,
    Claim3Case, ReplayConfig, ReplayError,
};
use hamforge::structures::three_adjacent_to_separating_4cycles;

fn fixture(name: &str) -> PlaneGraph {
    let path = format!("{}/tests/data/{name}.json", env!("CARGO_MANIFEST_DIR"));
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

/// Brute-force count of Hamiltonian cycles through every edge of `required`.
fn brute_count_through(g: &Graph, required: &[Edge]) -> usize {
    brute_cycles(g).into_iter().filter(|c| required.iter().all(|e| c.contains(e))).count()
}

fn assert_sound(g: &Graph, family: &HamFamily) {
    assert!(family.all_hamiltonian_in(g));
    let mut seen: Vec<_> = family.cycles().map(|c| {
        let mut e = c.edges();
        e.sort();
        e
    }).collect();
    let before = seen.len();
    seen.sort();
    seen.dedup();
    assert_eq!(seen.len(), before, "duplicate cycles");
}

/// Edge pairs `(e, f)` sharing a vertex and a face.
fn facial_pairs(pg: &PlaneGraph) -> Vec<(Edge, Edge)> {
    let mut out = vec![];
    for f in pg.faces() {
        for i in 0..3 {
            let (a, b, c) = (f[i], f[(i + 1) % 3], f[(i + 2) % 3]);
            out.push((edge(b, a), edge(b, c)));
        }
    }
    out
}

#[test]
fn lemma_on_octahedron_covers_every_facial_pair() {
    let pg = octahedron();
    let cfg = ReplayConfig::default();
    for (e, f) in facial_pairs(&pg) {
        let r = lemma_2edge_family(&pg, e, f, &cfg).unwrap();
        assert!(!r.family.is_empty(), "{e:?} {f:?}");
        assert_sound(pg.graph(), &r.family);
        assert!(r.family.cycles().all(|c| c.contains_edge(e.0, e.1) && c.contains_edge(f.0, f.1)));
    }
}

#[test]
fn lemma_rejects_edges_off_a_common_triangle() {
    let pg = octahedron();
    // 1 and 3 are opposite on the rim: 0-1 and 0-3 bound no common face
    let r = lemma_2edge_family(&pg, edge(0, 1), edge(0, 3), &ReplayConfig::default());
    assert!(matches!(r, Err(ReplayError::HypothesisViolated(_))));
}

#[test]
fn lemma_on_double_wheel_8_matches_constrained_count() {
    let pg = double_wheel(8).unwrap();
    // apex 6 over rim edge 0-1
    let (e, f) = (edge(6, 0), edge(6, 1));
    let r = lemma_2edge_family(&pg, e, f, &ReplayConfig { max_cycles: None, ..ReplayConfig::default() }).unwrap();
    assert_sound(pg.graph(), &r.family);
    assert_eq!(r.family.len(), brute_count_through(pg.graph(), &[e, f]));
}

#[test]
fn lemma_on_double_wheel_10_is_bounded_by_constrained_count() {
    let pg = double_wheel(10).unwrap();
    for (e, f) in facial_pairs(&pg) {
        let r = lemma_2edge_family(&pg, e, f, &ReplayConfig::default()).unwrap();
        assert!(!r.family.is_empty());
        assert_sound(pg.graph(), &r.family);
        assert!(r.family.len() <= brute_count_through(pg.graph(), &[e, f]));
    }
}

#[test]
fn theorem1_on_octahedron_gives_two_cycles() {
    let pg = octahedron();
    let r = theorem1_family(&pg, &ReplayConfig::default()).unwrap();
    assert!(r.family.len() >= 2);
    assert_sound(pg.graph(), &r.family);
}

#[test]
fn theorem1_on_double_wheel_10_against_exact_count() {
    let pg = double_wheel(10).unwrap();
    let r = theorem1_family(&pg, &ReplayConfig::default()).unwrap();
    assert_sound(pg.graph(), &r.family);
    assert!(r.family.len() as u64 <= dp_cycle_count(pg.graph()));
    assert!(!r.log.is_empty());
    assert!(r.log_jsonl().lines().all(|l| serde_json::from_str::<serde_json::Value>(l).is_ok()));
}

#[test]
fn theorem1_on_a_13_vertex_graph() {
    let cfg = GeneratorConfig { max_n: 20, flip_burn_in: 500, timeout_ms: 5000 };
    let pg = random_triangulation(13, 7, &CorpusFilter::four_connected(), &cfg).unwrap();
    let r = theorem1_family(&pg, &ReplayConfig::default()).unwrap();
    assert!(!r.family.is_empty());
    assert_sound(pg.graph(), &r.family);
    assert!(r.family.len() as u64 <= dp_cycle_count(pg.graph()));
}

#[test]
fn icosahedron_has_an_empty_star() {
    let pg = icosahedron();
    assert_eq!(three_adjacent_to_separating_4cycles(pg.graph()), 0);
    assert!(matches!(nested_chain(&pg, 0), Err(ReplayError::EmptyStar)));
    assert!(matches!(nested_chain(&pg, (1 << 12) - 1), Err(ReplayError::EmptyStar)));
}

#[test]
fn two_disjoint_diamonds_give_four_cycles() {
    let pg = fixture("two_disjoint_diamonds");
    let diamonds: Vec<_> = [9, 10].into_iter().map(|s| diamond_of(&pg, s).unwrap().unwrap()).collect();
    assert_eq!(diamonds[0].interior & diamonds[1].inner_closure(), 0);
    assert_eq!(diamonds[1].interior & diamonds[0].inner_closure(), 0);
    // per-region path counts, from the dynamic programme on each region alone
    let mut product = 1;
    for d in &diamonds {
        let (region, labels) = pg.graph().induced(d.inner_closure());
        let corners: Vec<usize> = d.inner.iter().map(|c| labels.iter().position(|l| l == c).unwrap()).collect();
        let best = (0..4)
            .flat_map(|i| (i + 1..4).map(move |k| (i, k)))
            .map(|(i, k)| {
                let (a, b) = (corners[i], corners[k]);
                let drop: u64 = corners.iter().filter(|&&c| c != a && c != b).map(|&c| bit(c)).sum();
                let (sub, sub_labels) = region.induced(region.vertices() & !drop);
                let at = |y: usize| sub_labels.iter().position(|&l| l == y).unwrap();
                dp_path_count(&sub, at(a), at(b))
            })
            .max()
            .unwrap();
        assert!(best >= 2);
        product *= 2;
    }
    let r = disjoint_diamond_family(&pg, &diamonds, &ReplayConfig::default()).unwrap();
    assert_eq!(r.family.len(), product);
    assert_sound(pg.graph(), &r.family);
}

#[test]
fn apart_diamonds_form_a_one_level_chain() {
    let pg = fixture("disjoint_pair");
    let chain = nested_chain(&pg, set(&[2, 8])).unwrap();
    assert_eq!(chain.len(), 1);
    assert_eq!(chain.disjoint.len(), 2);
    let [p, q] = [&chain.diamonds[0], &chain.diamonds[1]];
    assert_eq!(p.closure & q.interior, 0);
    assert_eq!(q.closure & p.interior, 0);
}

#[test]
fn no_diamonds_give_a_single_cycle() {
    let pg = icosahedron();
    let r = disjoint_diamond_family(&pg, &[], &ReplayConfig::default()).unwrap();
    assert_eq!(r.family.len(), 1);
    assert_sound(pg.graph(), &r.family);
}

#[test]
fn overlapping_interiors_are_rejected() {
    let pg = fixture("diamond_tower");
    let chain = nested_chain(&pg, set(&[3, 8, 12])).unwrap();
    let r = disjoint_diamond_family(&pg, &chain.diamonds[..2], &ReplayConfig::default());
    assert!(matches!(r, Err(ReplayError::InteriorsOverlap(0, 1))));
}

#[test]
fn tower_of_three_is_classified_and_grows_a_tree() {
    let pg = fixture("diamond_tower");
    let chain = nested_chain(&pg, set(&[3, 8, 12])).unwrap();
    assert_eq!(chain.len(), 3);
    // every pair classified, checked against a direct intersection count
    assert_eq!(chain.cases.len(), 3);
    for &(i, k, case) in &chain.cases {
        let (p, q) = (&chain.diamonds[i], &chain.diamonds[k]);
        let shared = (p.cert.vertices.iter().map(|&v| bit(v)).sum::<u64>() & q.cert.vertices.iter().map(|&v| bit(v)).sum::<u64>()).count_ones();
        assert!(shared <= 2);
        assert_eq!(classify_pair(p, q).unwrap(), case);
        assert_eq!(case == Claim3Case::Disjoint, shared == 0);
    }
    for w in chain.levels.windows(2) {
        let (outer, inner) = (&w[0].diamond, &w[1].diamond);
        assert_eq!(inner.closure & !outer.closure, 0);
        assert_ne!(inner.closure, outer.closure);
    }

    let tree = theorem2_tree(&pg, &chain, &ReplayConfig::default()).unwrap();
    assert!(!tree.partial);
    assert_eq!(tree.depth(), 3);
    assert_eq!(tree.per_depth[3] as usize, tree.leaves.len());
    assert_sound(pg.graph(), &tree.leaves);
    // leaves are cycles through the root's outside path; the region count bounds them
    let first = &chain.levels[0].diamond;
    let (c, d) = tree.nodes[0].ends;
    let drop: u64 = first.inner.iter().filter(|&&y| y != c && y != d).map(|&y| bit(y)).sum();
    let (region, labels) = pg.graph().induced(first.inner_closure() & !drop);
    let at = |y: usize| labels.iter().position(|&l| l == y).unwrap();
    assert!(tree.leaves.len() as u64 <= dp_path_count(&region, at(c), at(d)));
    assert!(tree.min_branching().iter().take(2).all(|&b| b >= 2));
}

#[test]
fn single_level_tree_has_two_leaves() {
    let pg = double_wheel(10).unwrap();
    let chain = nested_chain(&pg, bit(0)).unwrap();
    assert_eq!(chain.len(), 1);
    let tree = theorem2_tree(&pg, &chain, &ReplayConfig::default()).unwrap();
    assert_eq!(tree.depth(), 1);
    assert!(tree.leaves.len() >= 2);
    assert_sound(pg.graph(), &tree.leaves);
}

#[test]
fn small_node_budget_truncates_the_tree() {
    let pg = fixture("diamond_tower");
    let chain = nested_chain(&pg, set(&[3, 8, 12])).unwrap();
    let tree = theorem2_tree(&pg, &chain, &ReplayConfig { max_tree_nodes: 4, ..ReplayConfig::default() }).unwrap();
    assert!(tree.partial);
    assert!(tree.nodes.len() <= 4);
    assert_sound(pg.graph(), &tree.leaves);
}

/// Minimum degree 5 leaves no separating 4-cycle in the corpus up to 14 vertices, so
/// the dichotomy is exercised on all 4-connected graphs: a violating pair must sit
/// next to a vertex of degree 4, where the hypothesis fails.
#[test]
fn claim3_dichotomy_on_corpus() {
    let mut classified = 0;
    for n in 8..=11 {
        for pg in enumerate_triangulations(n, &CorpusFilter::four_connected()).unwrap() {
            let g = pg.graph();
            let ds: Vec<_> = members(three_adjacent_to_separating_4cycles(g)).filter_map(|s| diamond_of(&pg, s).unwrap()).collect();
            for i in 0..ds.len() {
                for k in i + 1..ds.len() {
                    match classify_pair(&ds[i], &ds[k]) {
                        Ok(_) => classified += 1,
                        Err(ReplayError::Claim3Violated(..)) => {
                            let near = ds[i].closure | ds[k].closure;
                            assert!(members(near).any(|v| g.degree(v) == 4), "{:?} {:?}", ds[i].cert, ds[k].cert);
                        }
                        Err(e) => panic!("{e}"),
                    }
                }
            }
        }
    }
    assert!(classified > 0);
}
