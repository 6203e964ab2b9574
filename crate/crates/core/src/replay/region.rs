//! The region `R` inside a 4-cycle `u v w x` through a common-neighbour pair `v, x`,
//! its block chain, and the path and cycle surgery the replays share.

use super::{failed, hypothesis, ReplayError};
use crate::ham::{find_ham_cycle, for_each_ham_path_within, Constraints, HamCycle};
use crate::plane_graph::{bit, block_chain, edge, members, set_of, BlockChain, Edge, Graph, PlaneGraph, Side, VSet};
use crate::structures::PairCert;
use serde::Serialize;
use std::collections::BTreeSet;
use std::ops::ControlFlow;

/// Consecutive two-vertex blocks the contraction step needs.
pub const RUN_LENGTH: usize = 7;

#[derive(Clone, Debug, Serialize)]
pub struct PairRegion {
    pub v: usize,
    pub x: usize,
    /// `u v w x`, with the region on the right.
    pub cycle: [usize; 4],
    #[serde(skip)]
    pub side: Side,
    /// `V(R)`: the cycle and everything inside.
    pub closure: VSet,
    /// `R` on the ids of the whole graph: chords outside the cycle are absent.
    #[serde(skip)]
    pub graph: Graph,
    /// Blocks of `R - {v, x}` from `u` to `w`.
    pub chain: BlockChain,
}

impl PairRegion {
    pub fn u(&self) -> usize {
        self.cycle[0]
    }

    pub fn w(&self) -> usize {
        self.cycle[2]
    }

    pub fn inner(&self) -> VSet {
        self.side.inner
    }

    /// The first run of [`RUN_LENGTH`] two-vertex blocks, as `u_1 .. u_6` (the
    /// interior joints of the run).
    pub fn short_run(&self) -> Option<[usize; 6]> {
        let t = self.chain.len();
        (0..t.saturating_sub(RUN_LENGTH - 1))
            .find(|&k| (k..k + RUN_LENGTH).all(|i| self.chain.block_size(i) == 2))
            .map(|k| std::array::from_fn(|i| self.chain.joints[k + 1 + i]))
    }
}

/// The region of `pair`: a 4-cycle `u v w x` with `u, w` common neighbours whose
/// closed side holds every common neighbour and some vertex strictly inside, and,
/// when given, not the face `avoid`.
pub fn pair_region(pg: &PlaneGraph, pair: &PairCert, avoid: Option<usize>) -> Result<PairRegion, ReplayError> {
    let (v, x) = (pair.v, pair.x);
    let common = set_of(pair.common.iter().copied());
    for &a in &pair.common {
        for &b in &pair.common {
            if a == b {
                continue;
            }
            let cycle = [a, v, b, x];
            let side = pg.right_side(&cycle)?;
            let on = set_of(cycle);
            if side.inner == 0 || common & !(side.inner | on) != 0 || avoid.is_some_and(|f| side.faces[f]) {
                continue;
            }
            let nt = pg.closure_of_side(&side)?;
            let edges = nt.graph().edges().into_iter().map(|(p, q)| edge(nt.labels[p], nt.labels[q]));
            let graph = Graph::from_edges(pg.n(), edges);
            let closure = side.inner | on;
            let chain = block_chain(&graph, closure & !bit(v) & !bit(x), a, b)?;
            return Ok(PairRegion { v, x, cycle, side, closure, graph, chain });
        }
    }
    Err(hypothesis(format!("no 4-cycle through {v} and {x} encloses their common neighbours")))
}

/// Every Hamiltonian `a`-`b` path of `g[within]`, in search order, at most `cap`.
pub(crate) fn all_paths(g: &Graph, within: VSet, a: usize, b: usize, cap: usize) -> Result<Vec<Vec<usize>>, ReplayError> {
    if within == bit(a) | bit(b) {
        return Ok(if g.has_edge(a, b) { vec![vec![a, b]] } else { vec![] });
    }
    let mut out = Vec::new();
    for_each_ham_path_within(g, within, a, b, &Constraints::none(), |p| {
        out.push(p.to_vec());
        if out.len() >= cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(out)
}

/// Concatenations of one choice per piece, consecutive pieces sharing an end
/// vertex; the last piece varies fastest.
pub(crate) fn product(pieces: &[Vec<Vec<usize>>], cap: usize) -> Vec<Vec<usize>> {
    if pieces.iter().any(|p| p.is_empty()) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut idx = vec![0usize; pieces.len()];
    loop {
        let mut path: Vec<usize> = Vec::new();
        for (piece, &i) in pieces.iter().zip(&idx) {
            let p = &piece[i];
            let skip = usize::from(!path.is_empty());
            path.extend_from_slice(&p[skip..]);
        }
        out.push(path);
        if out.len() >= cap {
            return out;
        }
        let mut k = pieces.len();
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            idx[k] += 1;
            if idx[k] < pieces[k].len() {
                break;
            }
            idx[k] = 0;
        }
    }
}

fn reversed(paths: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    paths.into_iter().map(|mut p| {
        p.reverse();
        p
    }).collect()
}

impl PairRegion {
    /// Paths of block `i` between its joints, in chain direction.
    fn block_paths(&self, i: usize, cap: usize) -> Result<Vec<Vec<usize>>, ReplayError> {
        let (a, b) = (self.chain.joints[i], self.chain.joints[i + 1]);
        all_paths(&self.graph, self.chain.blocks[i], a, b, cap)
    }

    /// Hamiltonian `a`-`b` paths of `R - (C \ {a, b})` assembled block by block: a
    /// product over the blocks between the two ends, closed off at `v` or `x` by a
    /// path through the end block with the far corner swapped for `v` or `x`.
    pub fn corner_paths(&self, a: usize, b: usize, cap: usize) -> Result<Vec<Vec<usize>>, ReplayError> {
        let [u, v, w, x] = self.cycle;
        let t = self.chain.len();
        let j = &self.chain.joints;
        let is_side = |c: usize| c == v || c == x;
        let blocks = |range: std::ops::Range<usize>| -> Result<Vec<Vec<Vec<usize>>>, ReplayError> {
            range.map(|i| self.block_paths(i, cap)).collect()
        };
        // end block `i` with corner `drop` replaced by the side vertex `s`, from joint `from`
        let end = |i: usize, drop: usize, s: usize, from: usize| -> Result<Vec<Vec<usize>>, ReplayError> {
            all_paths(&self.graph, (self.chain.blocks[i] & !bit(drop)) | bit(s), from, s, cap)
        };
        let paths = match (a, b) {
            _ if set_of([a, b]) == set_of([u, w]) => {
                let p = product(&blocks(0..t)?, cap);
                if a == u { p } else { reversed(p) }
            }
            _ if set_of([a, b]) == set_of([v, x]) => {
                if t == 1 {
                    all_paths(&self.graph, self.closure & !bit(u) & !bit(w), a, b, cap)?
                } else {
                    let mut pieces = vec![reversed(end(0, u, a, j[1])?)];
                    pieces.extend(blocks(1..t - 1)?);
                    pieces.push(end(t - 1, w, b, j[t - 1])?);
                    product(&pieces, cap)
                }
            }
            _ if a == u && is_side(b) || b == u && is_side(a) => {
                let s = if a == u { b } else { a };
                let mut pieces = blocks(0..t - 1)?;
                pieces.push(end(t - 1, w, s, j[t - 1])?);
                let p = product(&pieces, cap);
                if a == u { p } else { reversed(p) }
            }
            _ if a == w && is_side(b) || b == w && is_side(a) => {
                let s = if a == w { b } else { a };
                let mut pieces = vec![reversed(end(0, u, s, j[1])?)];
                pieces.extend(blocks(1..t)?);
                // built from s to w
                let p = product(&pieces, cap);
                if a == s { p } else { reversed(p) }
            }
            _ => return Err(hypothesis(format!("{a} and {b} are not two corners of {:?}", self.cycle))),
        };
        let within = self.closure & !(set_of(self.cycle) & !bit(a) & !bit(b));
        for p in &paths {
            if p.first() != Some(&a) || p.last() != Some(&b) || !crate::ham::is_ham_path_within(&self.graph, within, p) {
                return Err(failed("corner_path_hamiltonian", (self, a, b, p)));
            }
        }
        Ok(paths)
    }

    /// Multiplies per-block choices; each block of three or more vertices must offer two.
    pub fn big_blocks_branch(&self) -> Result<bool, ReplayError> {
        for i in self.chain.big_blocks() {
            if self.block_paths(i, 2)?.len() < 2 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// One Hamiltonian cycle of `G` with the region interior contracted, through
/// `required`, opened at the contracted vertex and read on the ids of `G`: a path
/// between two corners of the region covering everything outside it.
pub(crate) fn outside_through_contraction(pg: &PlaneGraph, region: &PairRegion, required: &[Edge]) -> Result<Option<Vec<usize>>, ReplayError> {
    let con = pg.contract_side(&region.side)?;
    let mapped: Vec<Edge> = required.iter().map(|&(p, q)| edge(con.map[p], con.map[q])).collect();
    let Some(star_cycle) = find_ham_cycle(con.graph.graph(), &Constraints::requiring(&mapped))? else { return Ok(None) };
    let outside = open_at(&star_cycle, con.new_vertex)
        .expect("Hamiltonian cycle meets every vertex")
        .into_iter()
        .map(|y| con.origin[y].expect("only the new vertex merges"))
        .collect();
    Ok(Some(outside))
}

/// The cycle read from `z` on: the path between its two neighbours that avoids `z`.
pub(crate) fn open_at(c: &HamCycle, z: usize) -> Option<Vec<usize>> {
    let vs = c.vertices();
    let i = vs.iter().position(|&y| y == z)?;
    Some(vs[i + 1..].iter().chain(&vs[..i]).copied().collect())
}

/// The cycle `outside` + `inside`, two paths with the same ends.
pub(crate) fn close(outside: &[usize], inside: &[usize]) -> HamCycle {
    let mut vs = outside.to_vec();
    vs.extend(inside.iter().rev().skip(1).take(inside.len().saturating_sub(2)));
    HamCycle::new(&vs)
}

/// The cycle whose edge set is `edges`, if that set is one cycle through every vertex of `on`.
pub(crate) fn cycle_from_edges(edges: &BTreeSet<Edge>, on: VSet) -> Option<HamCycle> {
    let n = members(on).map(|v| v + 1).max()?;
    let mut adj = vec![Vec::new(); n];
    for &(a, b) in edges {
        if a >= n || b >= n {
            return None;
        }
        adj[a].push(b);
        adj[b].push(a);
    }
    if members(on).any(|v| adj[v].len() != 2) || edges.len() != on.count_ones() as usize {
        return None;
    }
    let start = on.trailing_zeros() as usize;
    let mut seq = vec![start];
    let (mut prev, mut cur) = (start, adj[start][0]);
    while cur != start {
        seq.push(cur);
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
    }
    (seq.len() == on.count_ones() as usize).then(|| HamCycle::new(&seq))
}

/// `a .. b` through `u3` and `u4` using the edge `u3 u4`.
pub(crate) fn through_pair(g: &Graph, a: usize, b: usize, u3: usize, u4: usize) -> Option<Vec<usize>> {
    [[u3, u4], [u4, u3]]
        .into_iter()
        .find(|&[p, q]| g.has_edge(a, p) && g.has_edge(q, b))
        .map(|[p, q]| vec![a, p, q, b])
}

/// Rebuilds cycles after a contraction: `kept[i]` is the original id of contracted
/// vertex `i` (`None` for the merged vertex `star`), and `expand` turns the two
/// neighbours of `star` into the original path between them.
pub(crate) fn lift<F>(c: &HamCycle, star: usize, kept: &[Option<usize>], mut expand: F) -> Option<HamCycle>
where
    F: FnMut(usize, usize) -> Option<Vec<usize>>,
{
    let open = open_at(c, star)?;
    let outside: Option<Vec<usize>> = open.iter().map(|&y| kept[y]).collect();
    let outside = outside?;
    let inside = expand(outside[0], *outside.last()?)?;
    Some(close(&outside, &inside))
}

/// Contraction of an edge followed by contraction of another, as one map from the
/// original ids to the final ones.
pub(crate) fn compose(first: &[usize], second: &[usize]) -> Vec<usize> {
    first.iter().map(|&y| second[y]).collect()
}

/// Original id of each final vertex, for a map that is injective off `merged`.
pub(crate) fn invert(map: &[usize], len: usize, merged: VSet) -> Vec<Option<usize>> {
    let mut out = vec![None; len];
    for (old, &new) in map.iter().enumerate() {
        if merged & bit(old) == 0 {
            out[new] = Some(old);
        }
    }
    out
}

pub(crate) fn check_cycle(g: &Graph, c: &HamCycle, required: &[Edge]) -> bool {
    c.is_hamiltonian_in(g) && required.iter().all(|&(a, b)| c.contains_edge(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_enumerates_all_choices() {
        let pieces = vec![vec![vec![0, 1], vec![0, 5, 1]], vec![vec![1, 2]], vec![vec![2, 3], vec![2, 6, 3]]];
        let all = product(&pieces, usize::MAX);
        assert_eq!(all.len(), 4);
        assert_eq!(all[0], vec![0, 1, 2, 3]);
        assert_eq!(all[1], vec![0, 1, 2, 6, 3]);
        assert_eq!(product(&pieces, 3).len(), 3);
    }

    #[test]
    fn cycle_surgery() {
        let c = HamCycle::new(&[0, 1, 2, 3, 4]);
        assert_eq!(open_at(&c, 2).unwrap(), vec![3, 4, 0, 1]);
        let back = close(&[3, 4, 0, 1], &[3, 2, 1]);
        assert_eq!(back, c);
        let edges: BTreeSet<Edge> = c.edges().into_iter().collect();
        assert_eq!(cycle_from_edges(&edges, 0b11111).unwrap(), c);
        let mut broken = edges.clone();
        broken.remove(&(0, 1));
        broken.insert((0, 2));
        assert!(cycle_from_edges(&broken, 0b11111).is_none());
    }
}
