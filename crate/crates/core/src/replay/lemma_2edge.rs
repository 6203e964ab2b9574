//! Hamiltonian cycles through two edges of a triangle.

use super::region::{check_cycle, close, compose, cycle_from_edges, invert, lift, outside_through_contraction, pair_region, through_pair, PairRegion};
use super::{hypothesis, Branch, LevelRecord, Replay, ReplayConfig, ReplayError};
use crate::ham::{enumerate_ham_cycles, Constraints, HamCycle, HamFamily};
use crate::indset::{edge_families, special_set, IndSetCert, SaturationIndex, SpecialSet};
use crate::plane_graph::{bit, edge, is_k_connected, set_of, Edge, Graph, PlaneGraph};
use crate::structures::max_common_neighborhood_pair;
use crate::tutte::{ham_cycle_through_triangle_edges, tutte_path};
use serde_json::json;
use std::collections::BTreeSet;

/// `[s, a, b]` with `e = s a` and `f = s b`, when `a b` closes a triangle.
pub(crate) fn triangle(g: &Graph, e: Edge, f: Edge) -> Result<[usize; 3], ReplayError> {
    let (e, f) = (edge(e.0, e.1), edge(f.0, f.1));
    let present = |(p, q): Edge| p != q && g.has_edge(p, q);
    if e == f || !present(e) || !present(f) {
        return Err(hypothesis("e and f must be two distinct edges of G"));
    }
    let s = [e.0, e.1].into_iter().find(|&y| y == f.0 || y == f.1).ok_or_else(|| hypothesis("e and f share no vertex"))?;
    let other = |(p, q): Edge| if p == s { q } else { p };
    let (a, b) = (other(e), other(f));
    if !g.has_edge(a, b) {
        return Err(hypothesis("e and f do not lie in a triangle"));
    }
    Ok([s, a, b])
}

pub(crate) fn require_four_connected(pg: &PlaneGraph) -> Result<(), ReplayError> {
    if !pg.is_triangulation() {
        return Err(hypothesis("G is not a triangulation"));
    }
    if !is_k_connected(pg.graph(), 4) {
        return Err(hypothesis("G is not 4-connected"));
    }
    Ok(())
}

/// Hamiltonian cycles of a 4-connected triangulation through both `e` and `f`, two
/// edges of one triangle `T`.
///
/// Small graphs are enumerated. Otherwise an independent set avoiding `T` gives one
/// cycle per edge family; failing that, the pair with the most common neighbours
/// fixes a region `R` away from `T`, and either the region is contracted and region
/// paths spliced back, or (given seven consecutive two-vertex blocks) an edge `u3 u4`
/// of the chain is contracted, the smaller graph recursed on, and one more cycle
/// avoiding `u3 u4` added by exchange.
pub fn lemma_2edge_family(pg: &PlaneGraph, e: Edge, f: Edge, cfg: &ReplayConfig) -> Result<Replay, ReplayError> {
    at_depth(pg, e, f, cfg, 0)
}

pub(super) fn at_depth(pg: &PlaneGraph, e: Edge, f: Edge, cfg: &ReplayConfig, depth: usize) -> Result<Replay, ReplayError> {
    let g = pg.graph();
    let t = triangle(g, e, f)?;
    require_four_connected(pg)?;
    let required = [edge(e.0, e.1), edge(f.0, f.1)];
    let n = g.n();
    if n <= cfg.base_n {
        let mut rec = LevelRecord::new(depth, n, Branch::Base);
        let mut family = enumerate_ham_cycles(g, cfg.cap(), &Constraints::requiring(&required))?;
        family.source = "lemma_2edge:base".into();
        rec.size("cycles", family.len());
        rec.check("base_nonempty", !family.is_empty(), || json!({"edges": g.edges(), "e": e, "f": f}))?;
        return Ok(Replay { family, log: vec![rec] });
    }
    let special = special_set(g)?;
    if let SpecialSet::Set(cert) = &special {
        let s1 = cert.mask() & !set_of(t);
        if s1 != 0 {
            return edge_family_branch(g, t, &required, s1, cfg, depth);
        }
    }
    let mut rec0 = LevelRecord::new(depth, n, Branch::PairSplice);
    let pair = match special {
        SpecialSet::Pair(p) => p,
        SpecialSet::Set(_) => {
            rec0.size("threshold_relaxed", 1u64);
            max_common_neighborhood_pair(g).ok_or_else(|| hypothesis("every pair of vertices is adjacent"))?
        }
    };
    let face = pg.find_face_either(&t).ok_or_else(|| hypothesis("T is not a face"))?;
    let region = pair_region(pg, &pair, Some(face))?;
    rec0.size("common", pair.size());
    rec0.size("blocks", region.chain.len());
    rec0.size("big_blocks", region.chain.big_blocks().len());
    match region.short_run() {
        Some(run) => {
            rec0.branch = Branch::ContractRecurse;
            contract_branch(pg, &region, run, t, &required, cfg, depth, rec0)
        }
        None => splice_branch(pg, &region, &required, cfg, rec0),
    }
}

fn edge_family_branch(g: &Graph, t: [usize; 3], required: &[Edge; 2], s1: u64, cfg: &ReplayConfig, depth: usize) -> Result<Replay, ReplayError> {
    let [s, _, b] = t;
    let mut rec = LevelRecord::new(depth, g.n(), Branch::EdgeFamily);
    let cert = IndSetCert::certify(g, &SaturationIndex::new(g), s1, vec!["minus T".into()]);
    rec.size("set", cert.len());
    let fams = edge_families(g, &cert)?;
    rec.size("families_total", fams.total());
    let mut family = HamFamily::new("lemma_2edge:edge_family");
    let mut tried = 0u64;
    for fam in fams {
        if !cfg.room(tried as usize) {
            break;
        }
        tried += 1;
        let h = g.without_edges(&fam.edges);
        rec.check("g_minus_f_4_connected", is_k_connected(&h, 4), || json!({"edges": g.edges(), "F": fam.edges}))?;
        let p = tutte_path(&h, &t, s, b, required[0])?;
        rec.check("tutte_path_hamiltonian", p.is_hamiltonian_in(&h), || json!({"edges": h.edges(), "path": p.path}))?;
        let c = HamCycle::new(&p.path);
        rec.check("cycle_verified", check_cycle(g, &c, required) && c.is_hamiltonian_in(&h), || json!({"cycle": c}))?;
        let tag = fam.edges.iter().map(|(a, b)| format!("{a}-{b}")).collect::<Vec<_>>().join(",");
        family.insert(c, format!("F=[{tag}]"));
    }
    rec.size("families_tried", tried);
    rec.size("cycles", family.len());
    Ok(Replay { family, log: vec![rec] })
}

/// Contract the interior of the region, take one cycle of the contraction through
/// `e` and `f`, and replace the contracted vertex by each region path between its
/// two cycle neighbours.
fn splice_branch(pg: &PlaneGraph, region: &PairRegion, required: &[Edge; 2], cfg: &ReplayConfig, mut rec: LevelRecord) -> Result<Replay, ReplayError> {
    let g = pg.graph();
    let outside = outside_through_contraction(pg, region, required)?;
    rec.check("contraction_has_cycle", outside.is_some(), || json!({"edges": g.edges(), "region": region, "required": required}))?;
    let outside = outside.expect("checked");
    let (a, b) = (outside[0], *outside.last().expect("nonempty"));
    let paths = region.corner_paths(a, b, cfg.cap())?;
    rec.size("region_paths", paths.len());
    rec.check("region_path_exists", !paths.is_empty(), || json!({"region": region, "a": a, "b": b}))?;
    let mut family = HamFamily::new("lemma_2edge:splice");
    for p in paths {
        if !cfg.room(family.len()) {
            break;
        }
        let c = close(&outside, &p);
        rec.check("cycle_verified", check_cycle(g, &c, required), || json!({"cycle": c}))?;
        let fresh = family.insert(c, format!("splice {a}-{b}"));
        rec.check("splices_distinct", fresh, || json!({"path": p}))?;
    }
    rec.size("cycles", family.len());
    Ok(Replay { family, log: vec![rec] })
}

#[allow(clippy::too_many_arguments)]
fn contract_branch(
    pg: &PlaneGraph,
    region: &PairRegion,
    run: [usize; 6],
    t: [usize; 3],
    required: &[Edge; 2],
    cfg: &ReplayConfig,
    depth: usize,
    mut rec: LevelRecord,
) -> Result<Replay, ReplayError> {
    let g = pg.graph();
    let [_, u2, u3, u4, u5, _] = run;
    rec.check("run_joints_degree_4", run.iter().all(|&y| g.degree(y) == 4), || json!({"run": run}))?;
    let con1 = pg.contract_edge(u3, u4)?;
    let m1 = &con1.map;
    let sub = rec_mapped(&con1.graph, required, m1, cfg, depth + 1)?;
    let mut family = HamFamily::new("lemma_2edge:contract");
    for c in sub.family.cycles() {
        if !cfg.room(family.len()) {
            break;
        }
        let lifted = lift(c, con1.new_vertex, &con1.origin, |a, b| through_pair(g, a, b, u3, u4));
        rec.check("lift_exists", lifted.is_some(), || json!({"cycle": c, "run": run}))?;
        let lifted = lifted.expect("checked");
        rec.check("cycle_verified", check_cycle(g, &lifted, required), || json!({"cycle": lifted}))?;
        rec.check("lift_uses_u3u4", lifted.contains_edge(u3, u4), || json!({"cycle": lifted}))?;
        let fresh = family.insert(lifted, "lift");
        rec.check("lifts_distinct", fresh, || json!({"cycle": c}))?;
    }
    rec.size("lifted", family.len());

    // (G* - u*) + u2 u5 is G* with u* merged into u2
    let con2 = con1.graph.contract_edge(m1[u2], con1.new_vertex)?;
    let total = compose(m1, &con2.map);
    let back = invert(&total, g.n() - 2, bit(u3) | bit(u4));
    let gp = con2.graph.graph();
    let at = |y: usize| total[y];
    let [s, a, b] = t;
    let (v, x) = (region.v, region.x);
    let tc = ham_cycle_through_triangle_edges(gp, [at(s), at(a), at(b)], [at(v), at(u2), at(u5)], [at(x), at(u2), at(u5)])?;
    let cprime: BTreeSet<Edge> = tc
        .cycle
        .edges()
        .into_iter()
        .map(|(p, q)| edge(back[p].expect("bijective"), back[q].expect("bijective")))
        .collect();
    let extra = exchange(g, &cprime, v, x, run, required);
    rec.check("exchange_found", extra.is_some(), || json!({"edges": g.edges(), "cprime": cprime, "run": run, "v": v, "x": x}))?;
    let extra = extra.expect("checked");
    rec.check("exchange_avoids_u3u4", !extra.contains_edge(u3, u4), || json!({"cycle": extra}))?;
    let fresh = family.insert(extra, "exchange");
    rec.check("exchange_is_new", fresh, || json!({}))?;
    rec.size("cycles", family.len());
    let mut log = vec![rec];
    log.extend(sub.log);
    Ok(Replay { family, log })
}

fn rec_mapped(pg: &PlaneGraph, required: &[Edge; 2], map: &[usize], cfg: &ReplayConfig, depth: usize) -> Result<Replay, ReplayError> {
    let [e, f] = required.map(|(p, q)| edge(map[p], map[q]));
    at_depth(pg, e, f, cfg, depth)
}

/// Turns a Hamiltonian cycle of `(G - {u3, u4}) + u2 u5` through `v u2` or one of its
/// images under the two symmetries (swap `v` and `x`; read the run backwards) into
/// a Hamiltonian cycle of `G` avoiding `u3 u4`.
fn exchange(g: &Graph, cycle: &BTreeSet<Edge>, v0: usize, x0: usize, run: [usize; 6], required: &[Edge]) -> Option<HamCycle> {
    let [p1, p2, p3, p4, p5, p6] = run;
    for swap in [false, true] {
        for backwards in [false, true] {
            let (v, x) = if swap { (x0, v0) } else { (v0, x0) };
            let [u1, u2, u3, u4, u5] = if backwards { [p6, p5, p4, p3, p2] } else { [p1, p2, p3, p4, p5] };
            let has = |a: usize, b: usize| cycle.contains(&edge(a, b));
            if !has(v, u2) {
                continue;
            }
            let mut moves: Vec<(Vec<Edge>, Vec<Edge>)> = Vec::new();
            if has(u2, u5) && has(v, u1) {
                moves.push((vec![(v, u1), (v, u2), (u2, u5)], vec![(u1, u2), (u2, u3), (u3, v), (v, u4), (u4, u5)]));
            }
            if has(u2, u5) && has(x, u1) {
                moves.push((vec![(x, u1), (v, u2), (u2, u5)], vec![(u1, u2), (u2, u3), (u3, x), (v, u4), (u4, u5)]));
            }
            if has(u2, x) && has(v, u1) {
                moves.push((vec![(v, u1), (v, u2), (u2, x)], vec![(u1, u2), (u2, u3), (u3, v), (v, u4), (u4, x)]));
            }
            if has(u5, x) && !has(u2, u5) {
                moves.push((vec![(u2, v), (u5, x)], vec![(u2, u3), (u3, v), (x, u4), (u4, u5)]));
            }
            for (drop, add) in moves {
                let mut es = cycle.clone();
                for (a, b) in drop {
                    es.remove(&edge(a, b));
                }
                es.extend(add.into_iter().map(|(a, b)| edge(a, b)));
                if let Some(c) = cycle_from_edges(&es, g.vertices()) {
                    if check_cycle(g, &c, required) && !c.contains_edge(u3, u4) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}
