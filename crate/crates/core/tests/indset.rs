mod common;

use common::{brute_cycles, brute_k_connected};
use hamforge::corpus::{enumerate_range, icosahedron, CorpusFilter, DEFAULT_MAX_N};
use hamforge::indset::{
    check_hypotheses, edge_families, ham_family_from_edge_families, special_set, three_halves_bound, IndSetCert, SaturationIndex, SpecialSet,
};
use hamforge::plane_graph::{bit, Edge, Graph, VSet};
use hamforge::structures::{find_diamonds, DiamondKind};
use std::collections::BTreeSet;

fn connected_within(g: &Graph, keep: VSet) -> bool {
    let vs: Vec<usize> = (0..g.n()).filter(|&v| keep >> v & 1 == 1).collect();
    let mut seen = vec![vs[0]];
    let mut i = 0;
    while i < seen.len() {
        for &w in &vs {
            if g.has_edge(seen[i], w) && !seen.contains(&w) {
                seen.push(w);
            }
        }
        i += 1;
    }
    seen.len() == vs.len()
}

/// Vertex sets of all `k`-cycles, from ordered tuples.
fn cycle_sets(g: &Graph, k: usize) -> BTreeSet<VSet> {
    let mut out = BTreeSet::new();
    fn go(g: &Graph, k: usize, t: &mut Vec<usize>, out: &mut BTreeSet<VSet>) {
        if t.len() == k {
            if g.has_edge(t[k - 1], t[0]) {
                out.insert(t.iter().fold(0, |a, &v| a | bit(v)));
            }
            return;
        }
        for v in 0..g.n() {
            if !t.contains(&v) && t.last().is_none_or(|&l| g.has_edge(l, v)) {
                t.push(v);
                go(g, k, t, out);
                t.pop();
            }
        }
    }
    go(g, k, &mut Vec::new(), &mut out);
    out
}

/// The edge-family hypotheses, evaluated from their definitions.
fn brute_valid(g: &Graph, s: VSet) -> bool {
    let n = g.n();
    let set: Vec<usize> = (0..n).filter(|&v| s >> v & 1 == 1).collect();
    let independent = set.iter().all(|&a| set.iter().all(|&b| !g.has_edge(a, b)));
    let low = set.iter().all(|&v| g.degree(v) <= 6);
    let sat = |k| cycle_sets(g, k).iter().any(|c| (c & s).count_ones() >= 2);
    let sat6 = find_diamonds(g, DiamondKind::Diamond6).iter().any(|d| (d.crucial_set() & s).count_ones() >= 3);
    let sep4: Vec<VSet> = cycle_sets(g, 4).into_iter().filter(|&c| !connected_within(g, g.vertices() & !c)).collect();
    let min5 = (0..n).all(|v| g.degree(v) >= 5);
    let on_sep4 = sep4.iter().any(|c| c & s != 0);
    let three_adj = set.iter().any(|&v| sep4.iter().any(|&c| c >> v & 1 == 0 && (g.adj(v) & c).count_ones() >= 3));
    n >= 6 && independent && low && !sat(4) && !sat(5) && !sat6 && (min5 || !on_sep4) && !three_adj
}

fn members(s: VSet) -> Vec<usize> {
    (0..64).filter(|&v| s >> v & 1 == 1).collect()
}

#[test]
fn three_halves_bound_is_the_exact_ceiling() {
    for k in 0..=40usize {
        let b = three_halves_bound(k);
        let (p3, p2) = (3u128.pow(k as u32), 2u128.pow(k as u32));
        assert!(b * p2 >= p3 && (b - 1) * p2 < p3, "k = {k}");
    }
}

#[test]
fn hypotheses_match_definitions_on_every_subset() {
    let mut graphs = vec![icosahedron()];
    graphs.extend(enumerate_range(8, 9, &CorpusFilter::four_connected(), DEFAULT_MAX_N).unwrap().concat());
    for pg in &graphs {
        let g = pg.graph();
        for s in 0..(1u64 << g.n()) {
            assert_eq!(check_hypotheses(g, &members(s)).is_ok(), brute_valid(g, s), "set {:?}", members(s));
        }
    }
}

/// Every valid set of the icosahedron: each `G - F` is 4-connected by vertex-cut
/// search, every cycle is one the brute-force enumeration finds, and the family
/// reaches the bound.
#[test]
fn icosahedron_edge_families_exhaustively() {
    let pg = icosahedron();
    let g = pg.graph();
    let all: BTreeSet<Vec<Edge>> = brute_cycles(g).into_iter().collect();
    let index = SaturationIndex::new(g);
    let mut checked = 0;
    for s in 0..(1u64 << 12) {
        if !brute_valid(g, s) {
            continue;
        }
        let set = members(s);
        let cert = IndSetCert::certify(g, &index, s, vec!["test".into()]);
        let fams: Vec<_> = edge_families(g, &cert).unwrap().collect();
        assert_eq!(fams.len() as u128, set.iter().map(|&v| g.degree(v) as u128).product::<u128>());
        for f in &fams {
            let mut h = g.clone();
            for &(a, b) in &f.edges {
                h.remove_edge(a, b);
            }
            assert!(brute_k_connected(&h, 4), "{:?}", f.edges);
        }
        let report = ham_family_from_edge_families(g, &cert, None).unwrap();
        assert!(report.family.len() as u128 >= three_halves_bound(set.len()));
        for c in report.family.cycles() {
            let mut es = c.edges();
            es.sort();
            assert!(all.contains(&es));
        }
        checked += 1;
    }
    assert!(checked > 12, "only {checked} valid sets");
}

#[test]
fn special_set_on_icosahedron_is_a_set() {
    let g = icosahedron();
    match special_set(g.graph()).unwrap() {
        SpecialSet::Set(cert) => {
            assert!(cert.reverify(g.graph()));
            let mask = cert.mask();
            assert!(members(mask).iter().all(|&a| members(mask).iter().all(|&b| !g.graph().has_edge(a, b))));
        }
        SpecialSet::Pair(p) => panic!("pair {p:?}"),
    }
}
