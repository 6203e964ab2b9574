//! Two Hamiltonian paths between two vertices of the outer 4-cycle of a near
//! triangulation, or a certificate that the remaining graph is too thin to have them.
//!
//! Both constructions take the outer cycle as `u v w x` in clockwise order.
//! [`two_ham_paths_uw`] joins opposite corners in `R - {v, x}`;
//! [`two_ham_paths_uv`] joins adjacent corners in `R - {w, x}`.

use super::paths::{tutte_path, tutte_path_two_edges};
use super::region::outer_walk;
use super::{exhausted, hypothesis, TutteError};
use crate::ham::is_ham_path_within;
use crate::plane_graph::{bit, block_chain, edge, is_k_connected, members, set_of, Edge, Graph, NearTriangulation, VSet};
use crate::structures::has_separating_triangle;
use serde::{Deserialize, Serialize};

/// Two Hamiltonian paths with the same ends and different edge sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathPair {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    /// When set, neither path contains all of these edges.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub avoided: Option<Vec<Edge>>,
}

fn edge_set(p: &[usize]) -> Vec<Edge> {
    let mut e: Vec<Edge> = p.windows(2).map(|w| edge(w[0], w[1])).collect();
    e.sort_unstable();
    e
}

impl PathPair {
    /// Both are Hamiltonian `a`-`b` paths of `g[within]` and differ as edge sets.
    pub fn is_valid_in(&self, g: &Graph, within: VSet, a: usize, b: usize) -> bool {
        let ends = |p: &[usize]| p.first() == Some(&a) && p.last() == Some(&b);
        let avoids = |p: &[usize]| {
            self.avoided.as_ref().is_none_or(|marked| {
                let es = edge_set(p);
                !marked.iter().all(|m| es.contains(&edge(m.0, m.1)))
            })
        };
        [&self.first, &self.second].iter().all(|p| ends(p) && is_ham_path_within(g, within, p) && avoids(p))
            && edge_set(&self.first) != edge_set(&self.second)
    }
}

/// `R - {v, x}` is the path below.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathWitness {
    pub path: Vec<usize>,
}

impl PathWitness {
    /// The path is Hamiltonian in `g[within]` and `g[within]` has no other edges.
    pub fn is_valid_in(&self, g: &Graph, within: VSet) -> bool {
        let edges = members(within).map(|v| (g.adj(v) & within).count_ones() as usize).sum::<usize>() / 2;
        is_ham_path_within(g, within, &self.path) && edges + 1 == self.path.len()
    }
}

/// `R - {w, x}` has every vertex on its outer walk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OuterPlanarWitness {
    pub vertices: Vec<usize>,
    pub outer_walk: Vec<usize>,
}

impl OuterPlanarWitness {
    pub fn is_valid(&self) -> bool {
        set_of(self.vertices.iter().copied()) == set_of(self.outer_walk.iter().copied())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum UwOutcome {
    TwoPaths(PathPair),
    Path(PathWitness),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "branch", rename_all = "snake_case")]
pub enum UvOutcome {
    OuterPlanar(OuterPlanarWitness),
    TwoPaths(PathPair),
}

fn corners(nt: &NearTriangulation) -> Result<[usize; 4], TutteError> {
    match nt.outer.as_slice() {
        &[u, v, w, x] => Ok([u, v, w, x]),
        _ => Err(hypothesis("outer cycle must have length 4")),
    }
}

/// Whether `roles` runs round the outer 4-cycle clockwise; an error if it is not the
/// outer cycle in either direction.
fn orientation(nt: &NearTriangulation, roles: [usize; 4]) -> Result<bool, TutteError> {
    let outer = &nt.outer;
    let bad = || hypothesis("roles must list the outer 4-cycle in cyclic order");
    if outer.len() != 4 {
        return Err(hypothesis("outer cycle must have length 4"));
    }
    let p = outer.iter().position(|&z| z == roles[0]).ok_or_else(bad)?;
    let fwd: Vec<usize> = (0..4).map(|i| outer[(p + i) % 4]).collect();
    let back: Vec<usize> = (0..4).map(|i| outer[(p + 4 - i) % 4]).collect();
    if fwd == roles {
        Ok(true)
    } else if back == roles {
        Ok(false)
    } else {
        Err(bad())
    }
}

fn common_hypotheses(nt: &NearTriangulation) -> Result<(), TutteError> {
    if has_separating_triangle(nt.graph()) {
        return Err(hypothesis("separating triangle"));
    }
    Ok(())
}

/// Concatenates paths that share consecutive end points.
fn join(parts: &[Vec<usize>]) -> Vec<usize> {
    let mut out = parts[0].clone();
    for p in &parts[1..] {
        debug_assert_eq!(out.last(), p.first());
        out.extend_from_slice(&p[1..]);
    }
    out
}

/// The two edges of the closed walk `walk` at vertex `a`: to its successor, then its predecessor.
fn walk_edges_at(walk: &[usize], a: usize) -> Vec<Edge> {
    let k = walk.len();
    let mut out = Vec::new();
    for i in (0..k).filter(|&i| walk[i] == a) {
        for e in [edge(a, walk[(i + 1) % k]), edge(a, walk[(i + k - 1) % k])] {
            if !out.contains(&e) {
                out.push(e);
            }
        }
    }
    out
}

/// Hamiltonian path of block `blk` between `a` and `b` through `e`, from a Tutte path.
fn block_path(g: &Graph, plane_walk: &[usize], blk: VSet, a: usize, b: usize, e: Edge) -> Result<Vec<usize>, TutteError> {
    let sub = g.restricted(blk);
    let p = tutte_path(&sub, plane_walk, a, b, e)?;
    if !p.is_hamiltonian_in(&sub) {
        return Err(exhausted(("block_path", g.edges(), blk, a, b, e, p.path)));
    }
    Ok(p.path)
}

/// Opposite corners: two Hamiltonian `u`-`w` paths of `R - {v, x}`, or the fact that
/// `R - {v, x}` is itself a path.
pub fn two_ham_paths_uw(nt: &NearTriangulation) -> Result<UwOutcome, TutteError> {
    let [u, v, w, x] = corners(nt)?;
    two_ham_paths_uw_roles(nt, [u, v, w, x])
}

/// As [`two_ham_paths_uw`] for any labelling of the outer 4-cycle in cyclic order.
pub fn two_ham_paths_uw_roles(nt: &NearTriangulation, roles: [usize; 4]) -> Result<UwOutcome, TutteError> {
    orientation(nt, roles)?;
    let [u, v, w, x] = roles;
    let g = nt.graph();
    if g.has_edge(v, x) {
        return Err(hypothesis(if nt.n() == 4 { "R is C + vx" } else { "vx is a chord" }));
    }
    common_hypotheses(nt)?;
    let within = g.vertices() & !bit(v) & !bit(x);
    let chain = block_chain(g, within, u, w).map_err(|e| hypothesis(format!("R - {{v, x}}: {e}")))?;
    let big = chain.big_blocks();
    let Some(&s) = big.first() else {
        return Ok(UwOutcome::Path(PathWitness { path: chain.joints }));
    };
    let mut first = Vec::new();
    let mut second = Vec::new();
    for (i, &blk) in chain.blocks.iter().enumerate() {
        let (a, b) = (chain.joints[i], chain.joints[i + 1]);
        if chain.block_size(i) == 2 {
            first.push(vec![a, b]);
            second.push(vec![a, b]);
            continue;
        }
        let walk = outer_walk(&nt.plane, blk)?;
        let at_a = walk_edges_at(&walk, a);
        let p1 = block_path(g, &walk, blk, a, b, at_a[0])?;
        if i == s {
            second.push(block_path(g, &walk, blk, a, b, at_a[1])?);
        } else {
            second.push(p1.clone());
        }
        first.push(p1);
    }
    let pair = PathPair { first: join(&first), second: join(&second), avoided: None };
    if !pair.is_valid_in(g, within, u, w) {
        return Err(exhausted(("two_ham_paths_uw", g.edges(), roles, &pair)));
    }
    Ok(UwOutcome::TwoPaths(pair))
}

/// Adjacent corners: `R - {w, x}` is outer planar, or it has two Hamiltonian `u`-`v` paths.
pub fn two_ham_paths_uv(nt: &NearTriangulation) -> Result<UvOutcome, TutteError> {
    let [u, v, w, x] = corners(nt)?;
    two_ham_paths_uv_roles(nt, [u, v, w, x])
}

/// As [`two_ham_paths_uv`] for any labelling of the outer 4-cycle in cyclic order,
/// clockwise or not.
pub fn two_ham_paths_uv_roles(nt: &NearTriangulation, roles: [usize; 4]) -> Result<UvOutcome, TutteError> {
    common_hypotheses(nt)?;
    let clockwise = orientation(nt, roles)?;
    let out = uv_rec(nt, nt.graph().vertices(), roles, clockwise)?;
    let g = nt.graph();
    let base = g.vertices() & !bit(roles[2]) & !bit(roles[3]);
    let ok = match &out {
        UvOutcome::TwoPaths(p) => p.is_valid_in(g, base, roles[0], roles[1]),
        UvOutcome::OuterPlanar(wit) => wit.is_valid() && set_of(wit.vertices.iter().copied()) == base,
    };
    if !ok {
        return Err(exhausted(("two_ham_paths_uv", g.edges(), roles, &out)));
    }
    Ok(out)
}

fn witness(nt: &NearTriangulation, base: VSet, u: usize, v: usize) -> Result<OuterPlanarWitness, TutteError> {
    let vertices: Vec<usize> = members(base).collect();
    let outer_walk = if vertices.len() == 2 { vec![u, v] } else { outer_walk(&nt.plane, base)? };
    Ok(OuterPlanarWitness { vertices, outer_walk })
}

/// The current region is `R[within]` with outer cycle `roles`.
fn uv_rec(nt: &NearTriangulation, within: VSet, roles: [usize; 4], clockwise: bool) -> Result<UvOutcome, TutteError> {
    let g = nt.graph();
    let [u, v, w, x] = roles;
    let base = within & !bit(w) & !bit(x);
    if within.count_ones() == 4 {
        return Ok(UvOutcome::OuterPlanar(witness(nt, base, u, v)?));
    }
    if g.has_edge(u, w) || g.has_edge(v, x) {
        return Err(hypothesis("a diagonal of the outer 4-cycle is present"));
    }
    let interior = within & !set_of(roles);
    let nu = g.adj(u) & interior;
    let nv = g.adj(v) & interior;
    if nu.count_ones() == 1 {
        let u1 = nu.trailing_zeros() as usize;
        return Ok(match uv_rec(nt, within & !bit(u), [u1, v, w, x], clockwise)? {
            UvOutcome::TwoPaths(mut p) => {
                p.first.insert(0, u);
                p.second.insert(0, u);
                UvOutcome::TwoPaths(p)
            }
            UvOutcome::OuterPlanar(_) => UvOutcome::OuterPlanar(witness(nt, base, u, v)?),
        });
    }
    if nv.count_ones() == 1 {
        let v1 = nv.trailing_zeros() as usize;
        return Ok(match uv_rec(nt, within & !bit(v), [u, v1, w, x], clockwise)? {
            UvOutcome::TwoPaths(mut p) => {
                p.first.push(v);
                p.second.push(v);
                UvOutcome::TwoPaths(p)
            }
            UvOutcome::OuterPlanar(_) => UvOutcome::OuterPlanar(witness(nt, base, u, v)?),
        });
    }
    if nu == 0 || nv == 0 {
        return Err(hypothesis("an outer corner has no interior neighbour"));
    }
    let two_connected = |s: VSet| is_k_connected(&g.induced(s).0, 2);
    let pair = if two_connected(base & !bit(u)) {
        two_paths_main(nt, within, [u, v, w, x], clockwise)?
    } else if two_connected(base & !bit(v)) {
        // mirror image: v u x w runs the other way round
        let p = two_paths_main(nt, within, [v, u, x, w], !clockwise)?;
        PathPair {
            first: p.first.into_iter().rev().collect(),
            second: p.second.into_iter().rev().collect(),
            avoided: None,
        }
    } else {
        return Err(exhausted(("uv_two_connected", g.edges(), within, roles)));
    };
    Ok(UvOutcome::TwoPaths(pair))
}

fn unique_common(g: &Graph, a: usize, b: usize, among: VSet) -> Result<usize, TutteError> {
    let c = g.common_neighbors(a, b) & among;
    if c.count_ones() != 1 {
        return Err(hypothesis(format!("{a} and {b} have {} common neighbours in the region", c.count_ones())));
    }
    Ok(c.trailing_zeros() as usize)
}

/// `H = R[within] - {u, w, x}` is 2-connected: a Tutte path `u1 .. v` through an outer
/// edge at `y`, and a two-edge Tutte path `v .. u2`, each closed off at `u`.
fn two_paths_main(nt: &NearTriangulation, within: VSet, roles: [usize; 4], clockwise: bool) -> Result<PathPair, TutteError> {
    let g = nt.graph();
    let [u, v, w, x] = roles;
    let h = within & !bit(u) & !bit(w) & !bit(x);
    let mut d = outer_walk(&nt.plane, h)?;
    if !clockwise {
        d.reverse();
    }
    let u1 = unique_common(g, u, x, h)?;
    let u2 = unique_common(g, u, v, h)?;
    let y = unique_common(g, w, x, h)?;
    let sub = g.restricted(h);
    for &e in &walk_edges_at(&d, y) {
        for &f in &walk_edges_at(&d, u1) {
            let q = match tutte_path_two_edges(&sub, &d, v, u2, e, f) {
                Err(TutteError::BadOrder) => continue,
                r => r?,
            };
            let p = tutte_path(&sub, &d, u1, v, e)?;
            if !p.is_hamiltonian_in(&sub) || !q.is_hamiltonian_in(&sub) {
                return Err(exhausted(("uv_main", g.edges(), within, roles, p.path, q.path)));
            }
            let mut first = vec![u];
            first.extend(p.path);
            let mut second = vec![u];
            second.extend(q.path.into_iter().rev());
            return Ok(PathPair { first, second, avoided: None });
        }
    }
    Err(exhausted(("uv_edge_order", g.edges(), within, roles, d)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::PlaneGraph;

    fn square_with_hub() -> NearTriangulation {
        let faces = vec![vec![0, 4, 1], vec![1, 4, 2], vec![2, 4, 3], vec![3, 4, 0], vec![0, 1, 2, 3]];
        NearTriangulation::new(PlaneGraph::from_faces(5, &faces).unwrap(), vec![0, 1, 2, 3]).unwrap()
    }

    #[test]
    fn hub_gives_a_path() {
        let nt = square_with_hub();
        assert_eq!(two_ham_paths_uw(&nt).unwrap(), UwOutcome::Path(PathWitness { path: vec![0, 4, 2] }));
        // R - {w, x} is the triangle 0 1 4, all on its outer walk
        match two_ham_paths_uv(&nt).unwrap() {
            UvOutcome::OuterPlanar(w) => assert!(w.is_valid()),
            other => panic!("expected outer planar, got {other:?}"),
        }
    }

    #[test]
    fn chord_is_rejected() {
        let faces = vec![vec![0, 3, 1], vec![1, 3, 2], vec![0, 1, 2, 3]];
        let nt = NearTriangulation::new(PlaneGraph::from_faces(4, &faces).unwrap(), vec![0, 1, 2, 3]).unwrap();
        // the chord joins 1 and 3, which are v and x
        assert!(matches!(two_ham_paths_uw(&nt), Err(TutteError::HypothesisViolated(_))));
    }
}
