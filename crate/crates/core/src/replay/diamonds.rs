//! The diamond-4-cycles attached to vertices that see three corners of a separating
//! 4-cycle, how pairs of them meet, the longest nested chain, and the family of
//! cycles a set of diamonds with disjoint interiors yields.

use super::region::{all_paths, check_cycle, open_at};
use super::{hypothesis, Branch, LevelRecord, Replay, ReplayConfig, ReplayError};
use crate::ham::{enumerate_ham_cycles, Constraints, HamCycle, HamFamily};
use crate::indset::{special_set_mindeg5, SpecialSet, Thresholds};
use crate::plane_graph::{bit, edge, members, set_of, Graph, NearTriangulation, PlaneGraph, Side, VSet};
use crate::structures::{separating_cycles, three_adjacent_to_separating_4cycles, DiamondCert, DiamondKind};
use crate::tutte::{two_ham_paths_uv_roles, two_ham_paths_uw_roles, TutteError, UvOutcome, UwOutcome};
use serde::Serialize;
use serde_json::json;

/// A diamond-4-cycle `D` with roles `[u, y, v, w, x]` (outer cycle `y v w x`,
/// crucial `u, y`) and the separating 4-cycle `C = u v w x` it wraps.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DiamondRegion {
    /// The vertex of `S*` this diamond was chosen for: `u` or `y`.
    pub star: usize,
    pub cert: DiamondCert,
    pub inner: [usize; 4],
    /// Vertices strictly inside `C`, the side away from `y`.
    pub interior: VSet,
    /// `V(closure(D))`.
    pub closure: VSet,
}

impl DiamondRegion {
    pub fn u(&self) -> usize {
        self.cert.vertices[0]
    }

    pub fn y(&self) -> usize {
        self.cert.vertices[1]
    }

    /// `V(closure(C))`.
    pub fn inner_closure(&self) -> VSet {
        self.interior | set_of(self.inner)
    }
}

/// The face treated as infinite: the designated outer face, else face 0.
fn infinite_face(pg: &PlaneGraph) -> usize {
    pg.outer_face().unwrap_or(0)
}

fn side_without(pg: &PlaneGraph, cycle: &[usize], away: usize) -> Result<Side, ReplayError> {
    let side = pg.right_side(cycle)?;
    if side.inner & bit(away) == 0 {
        return Ok(side);
    }
    let rev: Vec<usize> = cycle.iter().rev().copied().collect();
    Ok(pg.right_side(&rev)?)
}

fn region(star: usize, u: usize, y: usize, a: usize, d: usize, c: usize, interior: VSet) -> DiamondRegion {
    let (v, x) = (a.min(c), a.max(c));
    let vertices = vec![u, y, v, d, x];
    let cert = DiamondCert { kind: DiamondKind::Diamond4, crucial: vec![u, y], outer_cycle: vec![y, v, d, x], vertices };
    DiamondRegion { star, cert, inner: [u, v, d, x], interior, closure: interior | set_of([u, y, v, d, x]) }
}

/// Every diamond `G[K + s]` for a separating 4-cycle `K` with exactly three corners
/// adjacent to `s`, oriented so that its disc avoids the infinite face.
fn candidates(pg: &PlaneGraph, s: usize, separating: &[Vec<usize>]) -> Result<Vec<DiamondRegion>, ReplayError> {
    let g = pg.graph();
    let inf = infinite_face(pg);
    let mut out = Vec::new();
    for k in separating {
        if k.contains(&s) || (set_of(k.iter().copied()) & g.adj(s)).count_ones() != 3 {
            continue;
        }
        let i = (0..4).find(|&i| !g.has_edge(s, k[(i + 2) % 4])).expect("one corner is not a neighbour");
        let (a, b, c, d) = (k[(i + 3) % 4], k[i], k[(i + 1) % 4], k[(i + 2) % 4]);
        // the side of K away from s
        let far = side_without(pg, k, s)?;
        if far.faces[inf] {
            // the disc of K holds s; C = s a d c, inside away from b
            let inner = side_without(pg, &[s, a, d, c], b)?;
            if inner.inner != 0 {
                out.push(region(s, s, b, a, d, c, inner.inner));
            }
        } else {
            let in_d = [[s, a, b], [s, b, c]].iter().any(|t| pg.find_face_either(t) == Some(inf));
            if !in_d && far.inner != 0 {
                out.push(region(s, b, s, a, d, c, far.inner));
            }
        }
    }
    Ok(out)
}

/// `D_s`: the candidate for `s` with the largest closure, ties to the least outer cycle.
pub fn diamond_of(pg: &PlaneGraph, s: usize) -> Result<Option<DiamondRegion>, ReplayError> {
    let separating = separating_cycles(pg.graph(), 4);
    best_of(candidates(pg, s, &separating)?)
}

fn best_of(cands: Vec<DiamondRegion>) -> Result<Option<DiamondRegion>, ReplayError> {
    Ok(cands.into_iter().min_by(|p, q| {
        q.closure.count_ones().cmp(&p.closure.count_ones()).then_with(|| p.cert.outer_cycle.cmp(&q.cert.outer_cycle))
    }))
}

/// How two diamonds of the family may meet.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Claim3Case {
    Disjoint,
    OneShared,
    /// Two shared vertices joined by an edge of both, neither crucial in either.
    SharedEdgeNoCrucial,
    /// Two shared vertices, nonadjacent in both, each diamond has one of them crucial.
    OppositeOneCrucialEach,
}

pub fn classify_pair(p: &DiamondRegion, q: &DiamondRegion) -> Result<Claim3Case, ReplayError> {
    let violated = || ReplayError::Claim3Violated(p.cert.vertices.clone(), q.cert.vertices.clone());
    let shared = p.cert.vertex_set() & q.cert.vertex_set();
    let case = match shared.count_ones() {
        0 => Claim3Case::Disjoint,
        1 => Claim3Case::OneShared,
        2 => {
            let mut it = members(shared);
            let e = edge(it.next().expect("two"), it.next().expect("two"));
            let (in_p, in_q) = (p.cert.edges().contains(&e), q.cert.edges().contains(&e));
            let (cp, cq) = ((p.cert.crucial_set() & shared).count_ones(), (q.cert.crucial_set() & shared).count_ones());
            match (in_p, in_q, cp, cq) {
                (true, true, 0, 0) => Claim3Case::SharedEdgeNoCrucial,
                (false, false, 1, 1) => Claim3Case::OppositeOneCrucialEach,
                _ => return Err(violated()),
            }
        }
        _ => return Err(violated()),
    };
    // the open discs are disjoint or one closure holds the other
    let apart = p.interior & q.interior == 0 && p.inner_closure() & q.interior == 0 && q.inner_closure() & p.interior == 0;
    let nested = p.closure & !q.closure == 0 || q.closure & !p.closure == 0;
    if apart || nested {
        Ok(case)
    } else {
        Err(violated())
    }
}

/// `S*`: the special independent set for minimum degree 5, cut down to the vertices
/// three-adjacent to a separating 4-cycle.
pub fn star_set(g: &Graph) -> Result<VSet, ReplayError> {
    match special_set_mindeg5(g, Thresholds::for_n(g.n()).t)? {
        SpecialSet::Set(cert) => Ok(cert.mask() & three_adjacent_to_separating_4cycles(g)),
        SpecialSet::Pair(p) => Err(hypothesis(format!("pair {} {} has {} common neighbours", p.v, p.x, p.size()))),
    }
}

/// One level of a nested chain: `G_j` is the closure of `C_j` with the interior of
/// `C_{j+1}` contracted (its merged vertex labelled `n`), `H_j` is `G` with the
/// interior of `C_j` contracted to its last vertex.
#[derive(Clone, Debug, Serialize)]
pub struct ChainLevel {
    pub diamond: DiamondRegion,
    pub ladder: NearTriangulation,
    #[serde(skip)]
    pub contracted: PlaneGraph,
    /// Ids of `G` in `H_j`; the interior goes to the last vertex.
    pub contracted_map: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NestedChain {
    /// `D_s` for every `s` of `S*` that has one, by `s`.
    pub diamonds: Vec<DiamondRegion>,
    /// Every pair of `diamonds`, by index, with how they meet.
    pub cases: Vec<(usize, usize, Claim3Case)>,
    /// The longest chain with nested closures, outermost first.
    pub levels: Vec<ChainLevel>,
    /// Indices into `diamonds` of a greedily chosen family with disjoint interiors.
    pub disjoint: Vec<usize>,
}

impl NestedChain {
    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn disjoint_diamonds(&self) -> Vec<DiamondRegion> {
        self.disjoint.iter().map(|&i| self.diamonds[i].clone()).collect()
    }
}

/// `q` sits inside `p`: both closures nest and `C_q` lies in the closed disc of `C_p`.
fn inside(p: &DiamondRegion, q: &DiamondRegion) -> bool {
    p != q && q.closure & !p.closure == 0 && q.inner_closure() & !p.inner_closure() == 0 && q.interior & !p.interior == 0 && q.interior != p.interior
}

fn apart(p: &DiamondRegion, q: &DiamondRegion) -> bool {
    p.interior & q.inner_closure() == 0 && q.interior & p.inner_closure() == 0
}

pub fn nested_chain(pg: &PlaneGraph, s_star: VSet) -> Result<NestedChain, ReplayError> {
    let g = pg.graph();
    let separating = separating_cycles(g, 4);
    let mut diamonds = Vec::new();
    for s in members(s_star) {
        if let Some(d) = best_of(candidates(pg, s, &separating)?)? {
            diamonds.push(d);
        }
    }
    if diamonds.is_empty() {
        return Err(ReplayError::EmptyStar);
    }
    let k = diamonds.len();
    let mut cases = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            cases.push((i, j, classify_pair(&diamonds[i], &diamonds[j])?));
        }
    }

    // longest chain: closures strictly shrink, so sort by size and run a DP
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&i| std::cmp::Reverse(diamonds[i].closure.count_ones() + diamonds[i].interior.count_ones()));
    let mut best = vec![1usize; k];
    let mut pred = vec![usize::MAX; k];
    for (pos, &i) in order.iter().enumerate() {
        for &j in &order[..pos] {
            if inside(&diamonds[j], &diamonds[i]) && best[j] + 1 > best[i] {
                best[i] = best[j] + 1;
                pred[i] = j;
            }
        }
    }
    let mut last = *order.iter().max_by_key(|&&i| (best[i], std::cmp::Reverse(i))).expect("nonempty");
    let mut chain = vec![last];
    while pred[last] != usize::MAX {
        last = pred[last];
        chain.push(last);
    }
    chain.reverse();

    let mut levels = Vec::with_capacity(chain.len());
    for (pos, &i) in chain.iter().enumerate() {
        let next = chain.get(pos + 1).map(|&j| &diamonds[j]);
        levels.push(level(pg, &diamonds[i], next)?);
    }

    let mut disjoint: Vec<usize> = Vec::new();
    for i in 0..k {
        if disjoint.iter().all(|&j| apart(&diamonds[i], &diamonds[j])) {
            disjoint.push(i);
        }
    }
    Ok(NestedChain { diamonds, cases, levels, disjoint })
}

fn interior_side(pg: &PlaneGraph, d: &DiamondRegion) -> Result<Side, ReplayError> {
    side_without(pg, &d.inner, d.y())
}

fn level(pg: &PlaneGraph, d: &DiamondRegion, next: Option<&DiamondRegion>) -> Result<ChainLevel, ReplayError> {
    let n = pg.n();
    let side = interior_side(pg, d)?;
    let closure = pg.closure_of_side(&side)?;
    let ladder = match next {
        None => closure,
        Some(e) => {
            let local = |y: usize| closure.labels.iter().position(|&l| l == y).expect("inner cycle lies in the disc");
            let cycle: Vec<usize> = e.inner.iter().map(|&y| local(y)).collect();
            let interior: VSet = members(e.interior).map(|y| bit(local(y))).fold(0, |a, b| a | b);
            let inner_side = side_without(&closure.plane, &cycle, local(e.y())).or_else(|_| closure.plane.right_side(&cycle).map_err(ReplayError::from))?;
            let inner_side = if inner_side.inner == interior { inner_side } else { closure.plane.right_side(&cycle.iter().rev().copied().collect::<Vec<_>>())? };
            let con = closure.plane.contract_side(&inner_side)?;
            let outer: Vec<usize> = closure.outer.iter().map(|&y| con.map[y]).collect();
            let mut nt = NearTriangulation::new(con.graph.without_outer_face(), outer)?;
            nt.labels = (0..nt.n()).map(|y| if y == con.new_vertex { n } else { closure.labels[con.origin[y].expect("kept")] }).collect();
            nt
        }
    };
    let con = pg.contract_side(&side)?;
    Ok(ChainLevel { diamond: d.clone(), ladder, contracted: con.graph, contracted_map: con.map })
}

/// Hamiltonian `a`-`b` paths of `closure(C) - (C \ {a, b})`, at least two when the
/// two-path lemmas apply; otherwise every path, found directly.
fn region_paths(pg: &PlaneGraph, d: &DiamondRegion, a: usize, b: usize, rec: &mut LevelRecord) -> Result<Vec<Vec<usize>>, ReplayError> {
    let side = interior_side(pg, d)?;
    let nt = pg.closure_of_side(&side)?;
    let local = |y: usize| nt.labels.iter().position(|&l| l == y).expect("corner");
    let o = &nt.outer;
    let (la, lb) = (local(a), local(b));
    let ia = o.iter().position(|&y| y == la).expect("corner");
    let ib = o.iter().position(|&y| y == lb).expect("corner");
    let outcome: Result<Vec<Vec<usize>>, TutteError> = if (ib + 4 - ia) % 4 == 2 {
        two_ham_paths_uw_roles(&nt, [la, o[(ia + 1) % 4], lb, o[(ia + 3) % 4]]).map(|r| match r {
            UwOutcome::TwoPaths(p) => vec![p.first, p.second],
            UwOutcome::Path(w) => vec![w.path],
        })
    } else {
        let step = if (ia + 1) % 4 == ib { 1 } else { 3 };
        two_ham_paths_uv_roles(&nt, [la, lb, o[(ib + step) % 4], o[(ib + 2 * step) % 4]]).and_then(|r| match r {
            UvOutcome::TwoPaths(p) => Ok(vec![p.first, p.second]),
            UvOutcome::OuterPlanar(_) => {
                let within = nt.graph().vertices() & !(nt.outer_set() & !bit(la) & !bit(lb));
                Ok(all_paths(nt.graph(), within, la, lb, 2).map_err(|e| TutteError::HypothesisViolated(e.to_string()))?)
            }
        })
    };
    let paths = match outcome {
        Ok(ps) => ps.into_iter().map(|p| p.into_iter().map(|y| nt.labels[y]).collect()).collect(),
        Err(TutteError::HypothesisViolated(_)) => {
            rec.size("lemma_fallback", rec.sizes.get("lemma_fallback").copied().unwrap_or(0) + 1);
            let within = d.inner_closure() & !(set_of(d.inner) & !bit(a) & !bit(b));
            all_paths(pg.graph(), within, a, b, 2)?
        }
        Err(e) => return Err(e.into()),
    };
    Ok(paths)
}

/// Contracted cycles tried before settling for one with a single-path slot.
const SKELETON_TRIES: usize = 64;

/// One Hamiltonian cycle of `G` with every diamond interior contracted, and one
/// region path per diamond put back in place of each contracted vertex.
pub fn disjoint_diamond_family(pg: &PlaneGraph, diamonds: &[DiamondRegion], cfg: &ReplayConfig) -> Result<Replay, ReplayError> {
    let g = pg.graph();
    for i in 0..diamonds.len() {
        for j in 0..diamonds.len() {
            if i != j && diamonds[i].interior & diamonds[j].inner_closure() != 0 {
                return Err(ReplayError::InteriorsOverlap(i.min(j), i.max(j)));
            }
        }
    }
    let mut rec = LevelRecord::new(0, g.n(), Branch::DisjointDiamonds);
    rec.size("diamonds", diamonds.len());
    // contract one interior after another, tracking where every original vertex went
    let mut cur = pg.clone();
    let mut at: Vec<usize> = (0..g.n()).collect();
    let mut stars: Vec<usize> = Vec::new();
    for d in diamonds {
        let cycle: Vec<usize> = d.inner.iter().map(|&y| at[y]).collect();
        let interior: VSet = members(d.interior).map(|y| bit(at[y])).fold(0, |a, b| a | b);
        let side = cur.right_side(&cycle)?;
        let side = if side.inner == interior { side } else { cur.right_side(&cycle.iter().rev().copied().collect::<Vec<_>>())? };
        rec.check("interior_is_a_side", side.inner == interior, || json!({"diamond": d}))?;
        let con = cur.contract_side(&side)?;
        for y in &mut at {
            *y = con.map[*y];
        }
        for z in &mut stars {
            *z = con.map[*z];
        }
        stars.push(con.new_vertex);
        cur = con.graph;
    }
    let back: Vec<Option<usize>> = {
        let mut b = vec![None; cur.n()];
        for (old, &new) in at.iter().enumerate() {
            if !stars.contains(&new) {
                b[new] = Some(old);
            }
        }
        b
    };
    let star_cycles = enumerate_ham_cycles(cur.graph(), SKELETON_TRIES, &Constraints::none())?;
    rec.check("contraction_has_cycle", !star_cycles.is_empty(), || json!({"edges": cur.graph().edges()}))?;

    // walk a contracted cycle once: kept vertices are copied, each star becomes a slot
    let skeleton_of = |star_cycle: &HamCycle| -> Vec<Result<usize, usize>> {
        let seq = match stars.first() {
            Some(&z) => {
                let mut s = open_at(star_cycle, z).expect("Hamiltonian");
                s.push(z);
                s
            }
            None => star_cycle.vertices().to_vec(),
        };
        seq.iter().map(|&y| stars.iter().position(|&z| z == y).map_or_else(|| Ok(back[y].expect("kept vertex")), Err)).collect()
    };
    // the first contracted cycle whose every slot has two region paths; else the first
    let mut chosen = None;
    for (tries, star_cycle) in star_cycles.cycles().enumerate() {
        let skeleton = skeleton_of(star_cycle);
        let len = skeleton.len();
        let mut slot_paths: Vec<Option<Vec<Vec<usize>>>> = vec![None; diamonds.len()];
        for (pos, item) in skeleton.iter().enumerate() {
            if let Err(i) = *item {
                let prev = skeleton[(pos + len - 1) % len].expect("stars are not adjacent");
                let next = skeleton[(pos + 1) % len].expect("stars are not adjacent");
                slot_paths[i] = Some(region_paths(pg, &diamonds[i], prev, next, &mut rec)?);
            }
        }
        let thin = slot_paths.iter().flatten().any(|ps| ps.len() < 2);
        if chosen.is_none() || !thin {
            chosen = Some((skeleton, slot_paths, tries));
        }
        if !thin {
            break;
        }
    }
    let (skeleton, slot_paths, tries) = chosen.expect("at least one cycle");
    rec.size("skeleton_tries", tries + 1);
    for (i, ps) in slot_paths.iter().enumerate() {
        let ps = ps.as_ref().expect("every star is on the cycle");
        rec.check("region_two_paths", ps.len() >= 2, || json!({"diamond": diamonds[i], "paths": ps}))?;
    }
    let len = skeleton.len();
    // one list of choices per star, in cycle order
    let mut pieces: Vec<Vec<Vec<usize>>> = Vec::new();
    for item in &skeleton {
        if let Err(i) = *item {
            pieces.push(slot_paths[i].clone().expect("filled"));
        }
    }
    let mut family = HamFamily::new("disjoint_diamonds");
    let mut idx = vec![0usize; pieces.len()];
    loop {
        if !cfg.room(family.len()) {
            break;
        }
        let mut walk: Vec<usize> = Vec::new();
        let mut k = 0;
        for (pos, item) in skeleton.iter().enumerate() {
            match *item {
                Ok(y) => walk.push(y),
                Err(_) => {
                    let prev = skeleton[(pos + len - 1) % len].expect("kept");
                    let p = &pieces[k][idx[k]];
                    let p: Vec<usize> = if p[0] == prev { p.clone() } else { p.iter().rev().copied().collect() };
                    walk.extend_from_slice(&p[1..p.len() - 1]);
                    k += 1;
                }
            }
        }
        let c = HamCycle::new(&walk);
        rec.check("cycle_verified", check_cycle(g, &c, &[]), || json!({"cycle": walk}))?;
        let fresh = family.insert(c, format!("choices {idx:?}"));
        rec.check("choices_distinct", fresh, || json!({"choices": idx}))?;
        // next choice vector, last star fastest
        let mut j = pieces.len();
        loop {
            if j == 0 {
                rec.size("cycles", family.len());
                return Ok(Replay { family, log: vec![rec] });
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < pieces[j].len() {
                break;
            }
            idx[j] = 0;
        }
    }
    rec.size("cycles", family.len());
    Ok(Replay { family, log: vec![rec] })
}
