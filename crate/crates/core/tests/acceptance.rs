//! One line per acceptance criterion; the process fails if any criterion does.
//! Every comparison is exact: integer counts with zero tolerance.

mod common;

use common::{dp_cycle_count, dp_path_count};
use hamforge::corpus::{double_wheel, enumerate_range, CorpusFilter, DEFAULT_MAX_N};
use hamforge::ham::{count_ham_cycles, Constraints, HamFamily};
use hamforge::indset::{check_hypotheses, ham_family_from_edge_families, three_halves_bound, IndSetCert, SaturationIndex};
use hamforge::plane_graph::{bit, edge, members, Edge, Graph, NearTriangulation, PlaneGraph, VSet};
use hamforge::replay::{lemma_2edge_family, theorem1_family, ReplayConfig};
use hamforge::structures::{cycles_of_length, has_separating_triangle};
use hamforge::tutte::{
    ham_cycle_through_triangle_edges, tutte_path, two_ham_paths_uv_roles, two_ham_paths_uw_roles, verify_tutte, TutteError, UvOutcome,
    UwOutcome,
};
use std::collections::BTreeSet;
use std::time::Instant;

/// Allowed absolute deviation of any count from its oracle.
const COUNT_TOLERANCE: u64 = 0;
/// Instances per graph for the triangle-triple criterion.
const MIN_TRIPLES_PER_GRAPH: usize = 100;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

// stays a comparison so a nonzero tolerance needs no other change
#[allow(clippy::absurd_extreme_comparisons)]
fn within_tolerance(got: u64, want: u64) -> bool {
    got.abs_diff(want) <= COUNT_TOLERANCE
}

fn double_wheel_formula(n: usize) -> u64 {
    2 * (n as u64 - 2) * (n as u64 - 4)
}

fn corpus(lo: usize, hi: usize, filter: &CorpusFilter) -> Vec<PlaneGraph> {
    enumerate_range(lo, hi, filter, DEFAULT_MAX_N).expect("corpus enumerates").concat()
}

fn path_count(g: &Graph, within: VSet, a: usize, b: usize) -> u64 {
    let (h, labels) = g.induced(within);
    let at = |v: usize| labels.iter().position(|&x| x == v).expect("endpoint kept");
    dp_path_count(&h, at(a), at(b))
}

/// Two nonadjacent vertices joined to everything else: the double wheel, for n >= 6.
fn looks_like_double_wheel(g: &Graph) -> bool {
    let n = g.n();
    let hubs: Vec<usize> = (0..n).filter(|&v| g.degree(v) == n - 2).collect();
    hubs.iter().any(|&a| hubs.iter().any(|&b| a != b && !g.has_edge(a, b))) && g.edge_count() == 3 * n - 6
}

/// Both sides of every 4-cycle of `pg` and of its mirror, closed off, without
/// separating triangles and with at most `max_live` vertices.
fn four_cycle_regions(pg: &PlaneGraph, max_live: usize) -> Vec<NearTriangulation> {
    let mut out = Vec::new();
    for p in [pg.clone(), pg.mirror()] {
        for c in cycles_of_length(p.graph(), 4) {
            let rev: Vec<usize> = c.iter().rev().copied().collect();
            for cyc in [c.clone(), rev] {
                let Ok(side) = p.right_side(&cyc) else { continue };
                let Ok(nt) = p.closure_of_side(&side) else { continue };
                let live = (0..nt.n()).filter(|&v| nt.graph().degree(v) > 0).count();
                if live <= max_live && !has_separating_triangle(nt.graph()) {
                    out.push(nt);
                }
            }
        }
    }
    out
}

fn criterion_1() -> Outcome {
    for n in 6..=13 {
        let g = double_wheel(n).map_err(|e| e.to_string())?;
        let got = count_ham_cycles(g.graph(), &Constraints::none()).map_err(|e| e.to_string())?;
        let oracle = dp_cycle_count(g.graph());
        ensure(within_tolerance(got, double_wheel_formula(n)) && within_tolerance(oracle, got), || {
            format!("n = {n}: count {got}, subset DP {oracle}, formula {}", double_wheel_formula(n))
        })?;
    }
    Ok("n = 6..13, count = 2(n-2)(n-4) = subset DP".into())
}

fn criterion_2() -> Outcome {
    let graphs = corpus(6, 11, &CorpusFilter::four_connected());
    let mut equalities = 0;
    for pg in &graphs {
        let g = pg.graph();
        let count = count_ham_cycles(g, &Constraints::none()).map_err(|e| e.to_string())?;
        let oracle = dp_cycle_count(g);
        let bound = double_wheel_formula(g.n());
        let dw = looks_like_double_wheel(g);
        ensure(within_tolerance(count, oracle), || format!("count {count} vs subset DP {oracle} on {:?}", g.edges()))?;
        ensure(count >= bound, || format!("counterexample: {count} < {bound} on {:?}", g.edges()))?;
        ensure((count == bound) == dw, || format!("equality off the double wheel: {count} on {:?}", g.edges()))?;
        equalities += (count == bound) as usize;
    }
    Ok(format!("{} graphs n <= 11, {equalities} equalities, all on double wheels", graphs.len()))
}

fn valid_sets(g: &Graph) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, set: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
        out.push(set.clone());
        for v in from..g.n() {
            set.push(v);
            if check_hypotheses(g, set).is_ok() {
                grow(g, set, v + 1, out);
            }
            set.pop();
        }
    }
    let mut out = Vec::new();
    grow(g, &mut Vec::new(), 0, &mut out);
    out
}

fn criterion_3() -> Outcome {
    let graphs = corpus(6, 12, &CorpusFilter::four_connected().with_min_degree(5));
    let (mut sets, mut families) = (0, 0);
    for pg in &graphs {
        let g = pg.graph();
        let index = SaturationIndex::new(g);
        for set in valid_sets(g) {
            let cert = IndSetCert::certify(g, &index, set.iter().fold(0, |a, &v| a | bit(v)), vec!["acceptance".into()]);
            // the construction checks 4-connectivity of every G - F and fails otherwise
            let r = ham_family_from_edge_families(g, &cert, None).map_err(|e| format!("set {set:?}: {e}"))?;
            let bound = three_halves_bound(set.len());
            ensure(r.family.len() as u128 >= bound, || format!("set {set:?}: {} < {bound}", r.family.len()))?;
            ensure(r.family.all_hamiltonian_in(g), || format!("set {set:?}: unverified cycle"))?;
            sets += 1;
            families += r.families_tried;
        }
    }
    ensure(sets > 0, || "no valid sets".into())?;
    Ok(format!("{} graphs, {sets} valid sets, {families} families", graphs.len()))
}

fn tutte_on(g: &Graph, outer: &[usize], triples: &mut u64) -> Result<(), String> {
    let k = outer.len();
    let designated: Vec<Edge> = (0..k).map(|i| edge(outer[i], outer[(i + 1) % k])).collect();
    let live = (0..g.n()).filter(|&v| g.degree(v) > 0).fold(0, |a, v| a | bit(v));
    for &x in outer {
        for &e in &designated {
            for y in members(live & !bit(x)) {
                let p = match tutte_path(g, outer, x, y, e) {
                    Ok(p) => p,
                    Err(err @ TutteError::SearchExhausted { .. }) => return Err(format!("search exhausted at {x} {y} {e:?}: {err}")),
                    Err(err) => return Err(format!("{x} {y} {e:?} on {:?}: {err}", g.edges())),
                };
                verify_tutte(g, &p.path, &designated).map_err(|err| format!("recheck: {err}"))?;
                ensure(p.path[0] == x && *p.path.last().unwrap() == y && p.contains_edge(e.0, e.1), || format!("{x} {y} {e:?}"))?;
                *triples += 1;
            }
        }
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let graphs = corpus(4, 10, &CorpusFilter::any());
    let (mut triples, mut regions) = (0u64, 0usize);
    for pg in &graphs {
        for f in pg.faces() {
            tutte_on(pg.graph(), f, &mut triples)?;
            regions += 1;
        }
        for nt in four_cycle_regions(pg, 10) {
            tutte_on(nt.graph(), &nt.outer, &mut triples)?;
            regions += 1;
        }
    }
    Ok(format!("{regions} outer cycles, {triples} triples, zero search exhaustions"))
}

fn criterion_5() -> Outcome {
    let graphs = corpus(5, 11, &CorpusFilter::any());
    let (mut regions, mut branches) = (0, [0usize; 4]);
    for pg in &graphs {
        for nt in four_cycle_regions(pg, 10) {
            let g = nt.graph();
            regions += 1;
            let o = &nt.outer;
            for s in 0..4 {
                for roles in [[o[s], o[(s + 1) % 4], o[(s + 2) % 4], o[(s + 3) % 4]], [o[s], o[(s + 3) % 4], o[(s + 2) % 4], o[(s + 1) % 4]]] {
                    let [u, v, w, x] = roles;
                    let uw_base = g.vertices() & !bit(v) & !bit(x);
                    match two_ham_paths_uw_roles(&nt, roles) {
                        // the u-w statement excludes a chord v-x
                        Err(TutteError::HypothesisViolated(_)) if g.has_edge(v, x) => {}
                        Err(e) => return Err(format!("uw {roles:?} on {:?}: {e}", g.edges())),
                        Ok(UwOutcome::TwoPaths(p)) => {
                            ensure(p.is_valid_in(g, uw_base, u, w) && path_count(g, uw_base, u, w) >= 2, || format!("uw (i) {roles:?}"))?;
                            branches[0] += 1;
                        }
                        Ok(UwOutcome::Path(wit)) => {
                            ensure(wit.is_valid_in(g, uw_base) && path_count(g, uw_base, u, w) == 1, || format!("uw (ii) {roles:?}"))?;
                            branches[1] += 1;
                        }
                    }
                    let uv_base = g.vertices() & !bit(w) & !bit(x);
                    match two_ham_paths_uv_roles(&nt, roles).map_err(|e| format!("uv {roles:?} on {:?}: {e}", g.edges()))? {
                        UvOutcome::TwoPaths(p) => {
                            ensure(p.is_valid_in(g, uv_base, u, v) && path_count(g, uv_base, u, v) >= 2, || format!("uv (i) {roles:?}"))?;
                            branches[2] += 1;
                        }
                        UvOutcome::OuterPlanar(wit) => {
                            ensure(wit.is_valid() && path_count(g, uv_base, u, v) < 2, || format!("uv (ii) {roles:?}"))?;
                            branches[3] += 1;
                        }
                    }
                }
            }
        }
    }
    ensure(branches.iter().all(|&b| b > 0), || format!("a branch never occurred: {branches:?}"))?;
    Ok(format!("{regions} regions; uw two/path {} {}, uv two/outer-planar {} {}", branches[0], branches[1], branches[2], branches[3]))
}

fn criterion_6() -> Outcome {
    let graphs = corpus(6, 10, &CorpusFilter::four_connected());
    let mut fewest = usize::MAX;
    for pg in &graphs {
        let g = pg.graph();
        let faces: Vec<[usize; 3]> = pg.faces().iter().map(|f| [f[0], f[1], f[2]]).collect();
        let mut done = 0;
        // every ordered triple of distinct faces and every corner of the first
        for (i, &t) in faces.iter().enumerate() {
            for r in 0..3 {
                let t = [t[r], t[(r + 1) % 3], t[(r + 2) % 3]];
                for (j, &t1) in faces.iter().enumerate() {
                    for (k, &t2) in faces.iter().enumerate() {
                        if i == j || j == k || i == k {
                            continue;
                        }
                        let tc = ham_cycle_through_triangle_edges(g, t, t1, t2).map_err(|e| format!("{t:?} {t1:?} {t2:?}: {e}"))?;
                        let four = [edge(t[0], t[1]), edge(t[0], t[2]), tc.e1, tc.e2];
                        let on = |e: Edge, f: [usize; 3]| f.contains(&e.0) && f.contains(&e.1);
                        ensure(
                            tc.cycle.is_hamiltonian_in(g)
                                && four.iter().all(|&(a, b)| tc.cycle.contains_edge(a, b))
                                && four.iter().collect::<BTreeSet<_>>().len() == 4
                                && on(tc.e1, t1)
                                && on(tc.e2, t2),
                            || format!("re-verification failed: {t:?} {t1:?} {t2:?}"),
                        )?;
                        done += 1;
                    }
                }
            }
        }
        fewest = fewest.min(done);
    }
    ensure(fewest >= MIN_TRIPLES_PER_GRAPH, || format!("only {fewest} triples on some graph"))?;
    Ok(format!("{} graphs, at least {fewest} triples each, all re-verified", graphs.len()))
}

fn sound(g: &Graph, family: &HamFamily, through: &[Edge], exact: u64) -> Result<(), String> {
    let keys: BTreeSet<Vec<Edge>> = family
        .cycles()
        .map(|c| {
            let mut e = c.edges();
            e.sort_unstable();
            e
        })
        .collect();
    ensure(family.all_hamiltonian_in(g), || "unverified cycle".into())?;
    ensure(keys.len() == family.len(), || "duplicate cycles".into())?;
    ensure(family.cycles().all(|c| through.iter().all(|&(a, b)| c.contains_edge(a, b))), || "missing a required edge".into())?;
    ensure(family.len() as u64 <= exact, || format!("{} cycles above the exact count {exact}", family.len()))
}

fn criterion_7() -> Outcome {
    let cfg = ReplayConfig::default();
    let mut lines = Vec::new();
    for n in 8..=12 {
        let pg = double_wheel(n).map_err(|e| e.to_string())?;
        let g = pg.graph();
        let mut pairs = 0;
        for f in pg.faces() {
            for i in 0..3 {
                let (a, b, c) = (f[i], f[(i + 1) % 3], f[(i + 2) % 3]);
                let (e1, e2) = (edge(b, a), edge(b, c));
                let r = lemma_2edge_family(&pg, e1, e2, &cfg).map_err(|e| format!("dw{n} {e1:?} {e2:?}: {e}"))?;
                // cycles through a-b-c are Hamiltonian a-c paths avoiding b
                let exact = path_count(g, g.vertices() & !bit(b), a, c);
                sound(g, &r.family, &[e1, e2], exact).map_err(|e| format!("dw{n} lemma {e1:?} {e2:?}: {e}"))?;
                ensure(!r.family.is_empty(), || format!("dw{n} {e1:?} {e2:?}: empty family"))?;
                pairs += 1;
            }
        }
        let r = theorem1_family(&pg, &cfg).map_err(|e| format!("dw{n} theorem1: {e}"))?;
        let exact = dp_cycle_count(g);
        sound(g, &r.family, &[], exact).map_err(|e| format!("dw{n} theorem1: {e}"))?;
        lines.push(format!("dw{n}: {pairs} pairs, theorem1 {}/{exact}", r.family.len()));
    }
    Ok(lines.join("; "))
}

fn criterion_8() -> Outcome {
    Ok("asymptotic and constant-scaled bounds are not checkable at feasible n; covered by criteria 3-7 step by step".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("double-wheel equality", criterion_1),
        ("conjecture consistency n <= 11", criterion_2),
        ("edge families n <= 12, min degree 5", criterion_3),
        ("Tutte-path totality n <= 10", criterion_4),
        ("two-path dichotomies n <= 10", criterion_5),
        ("triangle-edge cycles n <= 10", criterion_6),
        ("replay soundness on double wheels 8..12", criterion_7),
        ("asymptotic statements", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match (i + 1, outcome) {
            (8, Ok(msg)) => println!("criterion 8 NOT-REPRODUCIBLE {name}: {msg}"),
            (k, Ok(msg)) => println!("criterion {k} PASS {name} ({secs:.1}s): {msg}"),
            (k, Err(msg)) => {
                failed += 1;
                println!("criterion {k} FAIL {name} ({secs:.1}s): {msg}");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
