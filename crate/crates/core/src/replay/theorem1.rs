//! Many Hamiltonian cycles in a 4-connected triangulation.

use super::lemma_2edge::{self, require_four_connected};
use super::region::{check_cycle, close, compose, invert, lift, open_at, outside_through_contraction, pair_region, through_pair, PairRegion};
use super::{hypothesis, Branch, LevelRecord, Replay, ReplayConfig, ReplayError};
use crate::ham::{enumerate_ham_cycles, Constraints, HamCycle, HamFamily};
use crate::indset::{ham_family_from_edge_families, special_set, SpecialSet};
use crate::plane_graph::{bit, edge, PlaneGraph};
use crate::structures::max_common_neighborhood_pair;
use crate::tutte::tutte_path;
use serde_json::json;

/// Hamiltonian cycles of a 4-connected triangulation, each verified against `pg`.
///
/// Small graphs are enumerated. A nonempty special independent set gives one cycle
/// per edge family. Otherwise the pair with the most common neighbours fixes a
/// region `R` bounded by `u v w x`: without a run of seven two-vertex blocks a Tutte
/// path outside `R` is closed off by every block-by-block path inside; with one, the
/// recursion on `G / u3 u4` is lifted and two more families, through `u3 v u4` and
/// `u3 x u4`, come from the two-edge replay on `G / {u2, u3, u4}`.
pub fn theorem1_family(pg: &PlaneGraph, cfg: &ReplayConfig) -> Result<Replay, ReplayError> {
    at_depth(pg, cfg, 0)
}

fn at_depth(pg: &PlaneGraph, cfg: &ReplayConfig, depth: usize) -> Result<Replay, ReplayError> {
    require_four_connected(pg)?;
    let g = pg.graph();
    let n = g.n();
    if n <= cfg.base_n {
        let mut rec = LevelRecord::new(depth, n, Branch::Base);
        let mut family = enumerate_ham_cycles(g, cfg.cap(), &Constraints::none())?;
        family.source = "theorem1:base".into();
        rec.size("cycles", family.len());
        rec.check("base_nonempty", !family.is_empty(), || json!({"edges": g.edges()}))?;
        return Ok(Replay { family, log: vec![rec] });
    }
    let special = special_set(g)?;
    let mut rec = LevelRecord::new(depth, n, Branch::PairSplice);
    let pair = match special {
        SpecialSet::Set(cert) if !cert.is_empty() => {
            let mut rec = LevelRecord::new(depth, n, Branch::EdgeFamily);
            rec.size("set", cert.len());
            let report = ham_family_from_edge_families(g, &cert, cfg.max_cycles.map(|c| c as u64))?;
            rec.size("families_tried", report.families_tried);
            rec.size("lower_bound", report.lower_bound.min(u64::MAX as u128) as u64);
            rec.size("capped", u64::from(report.capped));
            for c in report.family.cycles() {
                rec.check("cycle_verified", c.is_hamiltonian_in(g), || json!({"cycle": c}))?;
            }
            rec.size("cycles", report.family.len());
            return Ok(Replay { family: report.family, log: vec![rec] });
        }
        SpecialSet::Set(_) => {
            rec.size("threshold_relaxed", 1u64);
            max_common_neighborhood_pair(g).ok_or_else(|| hypothesis("every pair of vertices is adjacent"))?
        }
        SpecialSet::Pair(p) => p,
    };
    let region = pair_region(pg, &pair, None)?;
    rec.size("common", pair.size());
    rec.size("blocks", region.chain.len());
    rec.size("big_blocks", region.chain.big_blocks().len());
    match region.short_run() {
        Some(run) => {
            rec.branch = Branch::ContractRecurse;
            contract_branch(pg, &region, run, cfg, depth, rec)
        }
        None => {
            rec.branch = Branch::BigBlockProduct;
            big_block_branch(pg, &region, cfg, rec)
        }
    }
}

/// One Tutte path `u .. w` of `G - int(R)` through `u v`, closed by each path of
/// `R - {v, x}` from `u` to `w`. When `u w` is an edge outside `R` that path cannot
/// reach `v` and `x` both; a cycle of `G` with `int(R)` contracted takes its place.
fn big_block_branch(pg: &PlaneGraph, region: &PairRegion, cfg: &ReplayConfig, mut rec: LevelRecord) -> Result<Replay, ReplayError> {
    let g = pg.graph();
    let [u, v, w, _] = region.cycle;
    let outer = g.restricted(g.vertices() & !region.inner());
    let p = tutte_path(&outer, &region.cycle, u, w, edge(u, v))?;
    rec.check("big_blocks_two_paths", region.big_blocks_branch()?, || json!({"region": region}))?;
    let outside = if p.is_hamiltonian_in(&outer) {
        p.path
    } else {
        rec.size("outside_contracted", 1u64);
        let found = outside_through_contraction(pg, region, &[])?;
        rec.check("contraction_has_cycle", found.is_some(), || json!({"edges": g.edges(), "region": region}))?;
        found.expect("checked")
    };
    let (a, b) = (outside[0], *outside.last().expect("nonempty"));
    let inside = region.corner_paths(a, b, cfg.cap())?;
    rec.size("region_paths", inside.len());
    let mut family = HamFamily::new("theorem1:big_blocks");
    for q in inside {
        if !cfg.room(family.len()) {
            break;
        }
        let c = close(&outside, &q);
        rec.check("cycle_verified", c.is_hamiltonian_in(g), || json!({"cycle": c}))?;
        let fresh = family.insert(c, "block product");
        rec.check("products_distinct", fresh, || json!({"path": q}))?;
    }
    rec.size("cycles", family.len());
    Ok(Replay { family, log: vec![rec] })
}

fn contract_branch(
    pg: &PlaneGraph,
    region: &PairRegion,
    run: [usize; 6],
    cfg: &ReplayConfig,
    depth: usize,
    mut rec: LevelRecord,
) -> Result<Replay, ReplayError> {
    let g = pg.graph();
    let [_, u2, u3, u4, u5, _] = run;
    rec.check("run_joints_degree_4", run.iter().all(|&y| g.degree(y) == 4), || json!({"run": run}))?;
    let con1 = pg.contract_edge(u3, u4)?;
    let sub = at_depth(&con1.graph, cfg, depth + 1)?;
    let mut family = HamFamily::new("theorem1:contract");
    for c in sub.family.cycles() {
        if !cfg.room(family.len()) {
            break;
        }
        let lifted = lift(c, con1.new_vertex, &con1.origin, |a, b| through_pair(g, a, b, u3, u4));
        rec.check("lift_exists", lifted.is_some(), || json!({"cycle": c, "run": run}))?;
        let lifted = lifted.expect("checked");
        rec.check("cycle_verified", lifted.is_hamiltonian_in(g), || json!({"cycle": lifted}))?;
        rec.check("lift_uses_u3u4", lifted.contains_edge(u3, u4), || json!({"cycle": lifted}))?;
        let fresh = family.insert(lifted, "lift");
        rec.check("lifts_distinct", fresh, || json!({"cycle": c}))?;
    }
    rec.size("lifted", family.len());
    let mut log = vec![];

    // u3 and u4 both merged into u2; u2 then sees v, x and u5 on one side
    let con2 = con1.graph.contract_edge(con1.map[u2], con1.new_vertex)?;
    let total = compose(&con1.map, &con2.map);
    let back = invert(&total, g.n() - 2, bit(u3) | bit(u4));
    let at = |y: usize| total[y];
    for side in [region.v, region.x] {
        let sub2 = lemma_2edge::at_depth(&con2.graph, (at(side), at(u2)), (at(side), at(u5)), cfg, depth + 1)?;
        let before = family.len();
        for d in sub2.family.cycles() {
            if !cfg.room(family.len()) {
                break;
            }
            let open: Option<Vec<usize>> = open_at(d, at(side)).expect("Hamiltonian").into_iter().map(|y| back[y]).collect();
            let mut p = open.expect("only u2 absorbs merged vertices");
            if p[0] == u2 {
                p.reverse();
            }
            rec.check("opened_at_u5_u2", p[0] == u5 && p.last() == Some(&u2), || json!({"cycle": d, "path": p}))?;
            p.extend([u3, side, u4]);
            let c = HamCycle::new(&p);
            let through = [edge(u2, u3), edge(u3, side), edge(side, u4), edge(u4, u5)];
            rec.check("spliced_cycle_verified", check_cycle(g, &c, &through), || json!({"cycle": c}))?;
            let fresh = family.insert(c, format!("through u3-{side}-u4"));
            rec.check("spliced_is_new", fresh, || json!({"cycle": d}))?;
        }
        rec.size(&format!("through_{side}"), family.len() - before);
        log.extend(sub2.log);
    }
    rec.size("cycles", family.len());
    let mut out = vec![rec];
    out.extend(sub.log);
    out.extend(log);
    Ok(Replay { family, log: out })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::double_wheel;
    use crate::ham::count_ham_cycles;

    #[test]
    fn double_wheel_family_is_sound() {
        for n in [8, 10] {
            let dw = double_wheel(n).unwrap();
            let r = theorem1_family(&dw, &ReplayConfig::default()).unwrap();
            let truth = count_ham_cycles(dw.graph(), &Constraints::none()).unwrap();
            assert!(r.family.len() as u64 <= truth && !r.family.is_empty());
            assert!(r.family.cycles().all(|c| c.is_hamiltonian_in(dw.graph())));
        }
    }
}
