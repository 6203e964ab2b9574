//! Tutte paths, the two-path dichotomies, diamond regions, edge families and
//! triangle-edge cycles, each against exhaustive counts.

use super::{four_cycle_regions, must, op, role_lists, Ctx, Skip, SuiteResult};
use crate::report::{Checks, Sample};
use hamforge::ham::{count_ham_paths_within, Constraints};
use hamforge::indset::{check_hypotheses, ham_family_from_edge_families, three_halves_bound, IndSetCert, IndSetError, SaturationIndex};
use hamforge::plane_graph::{bit, edge, is_k_connected, members, set_of, Graph, VSet};
use hamforge::structures::{find_diamonds_within, DiamondKind};
use hamforge::tutte::{
    diamond_region_paths, ham_cycle_through_triangle_edges, tutte_path, two_ham_paths_uv_roles, two_ham_paths_uw_roles, verify_tutte, DiamondConfig, RegionBranch,
    TutteError, UvOutcome, UwOutcome,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

fn paths(g: &Graph, within: VSet, a: usize, b: usize) -> Result<u64, Skip> {
    op(count_ham_paths_within(g, within, a, b, &Constraints::none()))
}

/// Every `(x, y, e)` with `x` and `e` on the outer cycle, for the whole graph
/// bounded by its first face and for every 4-cycle region.
pub fn tutte(s: &Sample, checks: &mut Checks) -> SuiteResult {
    let pg = &s.graph;
    let mut regions: Vec<(Graph, Vec<usize>)> = vec![(pg.graph().clone(), pg.faces()[0].clone())];
    regions.extend(four_cycle_regions(pg).into_iter().map(|nt| (nt.graph().clone(), nt.outer.clone())));
    let mut triples = 0u64;
    for (g, outer) in &regions {
        let k = outer.len();
        let designated: Vec<_> = (0..k).map(|i| edge(outer[i], outer[(i + 1) % k])).collect();
        for &x in outer {
            for &e in &designated {
                for y in members(g.vertices() & !bit(x)) {
                    triples += 1;
                    let params = || json!({ "edges": g.edges(), "outer": outer, "x": x, "y": y, "e": e });
                    let Some(p) = must(checks, "tutte_path_found", tutte_path(g, outer, x, y, e), params)? else { continue };
                    let ends = (p.path[0], *p.path.last().expect("nonempty"));
                    checks.check("ends_and_edge", ends == (x, y) && p.contains_edge(e.0, e.1), || json!({ "path": p.path, "x": x, "y": y, "e": e }));
                    let again = verify_tutte(g, &p.path, &designated);
                    must(checks, "verify_tutte", again, || json!({ "edges": g.edges(), "outer": outer, "path": p.path }))?;
                }
            }
        }
    }
    Ok(json!({ "regions": regions.len(), "triples": triples }))
}

/// Branch (i) of the `u`-`w` lemma holds exactly when two paths exist.
pub fn uw_path(s: &Sample, checks: &mut Checks) -> SuiteResult {
    let (mut two, mut one, mut chord) = (0u64, 0u64, 0u64);
    for nt in four_cycle_regions(&s.graph) {
        let g = nt.graph();
        for roles in role_lists(&nt.outer) {
            let [u, v, w, x] = roles;
            let base = g.vertices() & !bit(v) & !bit(x);
            let params = || json!({ "edges": g.edges(), "roles": roles });
            match two_ham_paths_uw_roles(&nt, roles) {
                Err(TutteError::HypothesisViolated(_)) if g.has_edge(v, x) => chord += 1,
                Err(e) => {
                    must::<(), _>(checks, "uw_outcome", Err(e), params)?;
                }
                Ok(UwOutcome::TwoPaths(p)) => {
                    two += 1;
                    checks.check("two_paths_valid", p.is_valid_in(g, base, u, w), params);
                    let truth = paths(g, base, u, w)?;
                    checks.check("branch_i_iff_two", truth >= 2, || json!({ "edges": g.edges(), "roles": roles, "count": truth }));
                }
                Ok(UwOutcome::Path(wit)) => {
                    one += 1;
                    checks.check("witness_valid", wit.is_valid_in(g, base), params);
                    let truth = paths(g, base, u, w)?;
                    checks.check("branch_ii_iff_one", truth == 1, || json!({ "edges": g.edges(), "roles": roles, "count": truth }));
                }
            }
        }
    }
    Ok(json!({ "two_paths": two, "path_graph": one, "chord_vx": chord }))
}

/// Branch (i) of the `u`-`v` lemma holds exactly when two paths exist.
pub fn uv_path(s: &Sample, checks: &mut Checks) -> SuiteResult {
    let (mut two, mut outer) = (0u64, 0u64);
    for nt in four_cycle_regions(&s.graph) {
        let g = nt.graph();
        for roles in role_lists(&nt.outer) {
            let [u, v, w, x] = roles;
            let base = g.vertices() & !bit(w) & !bit(x);
            let params = || json!({ "edges": g.edges(), "roles": roles });
            let Some(outcome) = must(checks, "uv_outcome", two_ham_paths_uv_roles(&nt, roles), params)? else { continue };
            let truth = paths(g, base, u, v)?;
            match outcome {
                UvOutcome::TwoPaths(p) => {
                    two += 1;
                    checks.check("two_paths_valid", p.is_valid_in(g, base, u, v), params);
                    checks.check("branch_i_iff_two", truth >= 2, || json!({ "edges": g.edges(), "roles": roles, "count": truth }));
                }
                UvOutcome::OuterPlanar(wit) => {
                    outer += 1;
                    checks.check("witness_valid", wit.is_valid(), params);
                    checks.check("branch_ii_iff_below_two", truth <= 1, || json!({ "edges": g.edges(), "roles": roles, "count": truth }));
                }
            }
        }
    }
    Ok(json!({ "two_paths": two, "outer_planar": outer }))
}

/// Per-pair tables around a degree-4 centre whose link bounds a diamond-4-cycle.
pub fn diamond4(s: &Sample, checks: &mut Checks) -> SuiteResult {
    let mut tables = 0u64;
    let mut rejected = 0u64;
    for nt in four_cycle_regions(&s.graph) {
        let g = nt.graph();
        let c = nt.outer_set();
        for z in members(g.vertices() & !c) {
            for d in find_diamonds_within(g, DiamondKind::Diamond4, g.vertices() & !bit(z)) {
                let Some(inner) = d.inner_cycle() else { continue };
                let link = set_of(inner);
                if link & g.adj(z) != link || g.degree(z) != 4 {
                    continue;
                }
                let table = match diamond_region_paths(&nt, z, &d) {
                    Ok(t) => t,
                    Err(TutteError::HypothesisViolated(_)) => {
                        rejected += 1;
                        continue;
                    }
                    Err(e) => {
                        must::<(), _>(checks, "diamond_region_paths", Err(e), || json!({ "edges": g.edges(), "z": z, "diamond": d }))?;
                        continue;
                    }
                };
                tables += 1;
                for p in &table.pairs {
                    let region = g.vertices() & !(c & !bit(p.a) & !bit(p.b));
                    let truth = paths(g, region, p.a, p.b)?;
                    checks.check("pair_count_exact", p.count == truth, || json!({ "edges": g.edges(), "z": z, "pair": [p.a, p.b], "count": p.count, "truth": truth }));
                    if let Some(pair) = &p.avoiding {
                        checks.check("avoiding_pair_valid", pair.is_valid_in(g, region, p.a, p.b), || json!({ "edges": g.edges(), "z": z, "pair": [p.a, p.b] }));
                    }
                }
                // only a shared edge can leave a unique pair, and then it is the two corners off the diamond
                let shape = match (table.config, table.branch) {
                    (_, RegionBranch::AllPairsTwo) => true,
                    (DiamondConfig::SharedEdgeNoCrucial, RegionBranch::OneUniquePair) => {
                        table.pairs.iter().find(|p| p.count == 1).is_some_and(|u| bit(u.a) | bit(u.b) == c & !d.vertex_set())
                    }
                    _ => false,
                };
                checks.check("branch_matches_config", shape, || json!({ "edges": g.edges(), "z": z, "table": table }));
            }
        }
    }
    Ok(json!({ "tables": tables, "hypothesis_rejected": rejected }))
}

/// Every valid independent set, grown vertex by vertex; the hypotheses are
/// inherited by subsets, so an invalid set prunes its supersets.
fn valid_sets(g: &Graph) -> Vec<Vec<usize>> {
    fn grow(g: &Graph, set: &mut Vec<usize>, from: usize, out: &mut Vec<Vec<usize>>) {
        out.push(set.clone());
        for v in from..g.n() {
            if set.iter().any(|&s| g.has_edge(s, v)) {
                continue;
            }
            set.push(v);
            if check_hypotheses(g, set).is_ok() {
                grow(g, set, v + 1, out);
            }
            set.pop();
        }
    }
    let mut out = Vec::new();
    if check_hypotheses(g, &[]).is_ok() {
        grow(g, &mut Vec::new(), 0, &mut out);
    }
    out
}

/// For every valid set `S` and every family `F`: `G - F` is 4-connected, and the
/// distinct cycles found number at least `ceil(1.5^|S|)`.
pub fn edgeset_f(s: &Sample, checks: &mut Checks) -> SuiteResult {
    let g = s.graph.graph();
    if !is_k_connected(g, 4) {
        return Err(Skip::NotApplicable("needs a 4-connected triangulation".into()));
    }
    let index = SaturationIndex::new(g);
    let sets = valid_sets(g);
    let mut families = 0u64;
    let mut largest = 0usize;
    for set in &sets {
        let cert = IndSetCert::certify(g, &index, set_of(set.iter().copied()), vec!["exhaustive".into()]);
        let params = || json!({ "set": set });
        let report = match ham_family_from_edge_families(g, &cert, None) {
            Ok(r) => r,
            Err(IndSetError::FourConnectivityLost(f)) => {
                checks.check("g_minus_f_four_connected", false, || json!({ "set": set, "family": f }));
                continue;
            }
            Err(e) => {
                must::<(), _>(checks, "edge_family_replay", Err(e), params)?;
                continue;
            }
        };
        checks.check("g_minus_f_four_connected", true, params);
        families += report.families_tried;
        largest = largest.max(set.len());
        let bound = three_halves_bound(set.len());
        checks.check("family_at_least_bound", report.family.len() as u128 >= bound, || json!({ "set": set, "got": report.family.len(), "bound": bound.to_string() }));
        checks.check("cycles_verified", report.family.all_hamiltonian_in(g), params);
    }
    Ok(json!({ "valid_sets": sets.len(), "largest_set": largest, "families": families }))
}

/// Sampled triples of distinct faces: a cycle through two edges of the first at a
/// corner and one edge of each of the others.
pub fn four_edges(s: &Sample, ctx: &Ctx, checks: &mut Checks) -> SuiteResult {
    let pg = &s.graph;
    let g = pg.graph();
    if !is_k_connected(g, 4) {
        return Err(Skip::NotApplicable("needs a 4-connected triangulation".into()));
    }
    let faces: Vec<[usize; 3]> = pg.faces().iter().map(|f| [f[0], f[1], f[2]]).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed ^ (pg.n() as u64) << 32);
    let mut ids: Vec<usize> = (0..faces.len()).collect();
    for _ in 0..ctx.samples {
        ids.shuffle(&mut rng);
        let mut t = faces[ids[0]];
        t.rotate_left(rng.gen_range(0..3));
        let (t1, t2) = (faces[ids[1]], faces[ids[2]]);
        let params = || json!({ "t": t, "t1": t1, "t2": t2 });
        let Some(tc) = must(checks, "cycle_found", ham_cycle_through_triangle_edges(g, t, t1, t2), params)? else { continue };
        let [u, v, w] = t;
        let on = |e: (usize, usize), tri: [usize; 3]| tri.contains(&e.0) && tri.contains(&e.1);
        let four = [edge(u, v), edge(u, w), tc.e1, tc.e2];
        let distinct = (0..4).all(|i| (i + 1..4).all(|k| four[i] != four[k]));
        let ok = tc.cycle.is_hamiltonian_in(g)
            && four.iter().all(|&(a, b)| tc.cycle.contains_edge(a, b))
            && on(tc.e1, t1)
            && on(tc.e2, t2)
            && distinct;
        checks.check("cycle_reverified", ok, || json!({ "t": t, "t1": t1, "t2": t2, "cycle": tc.cycle, "e1": tc.e1, "e2": tc.e2 }));
    }
    Ok(json!({ "triples": ctx.samples }))
}
