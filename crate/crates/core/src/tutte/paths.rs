//! Finding Tutte paths by search.
//!
//! A Hamiltonian path through the prescribed edges is Tutte for any designated
//! subgraph (all its bridges are chords), so it is tried first. Otherwise simple
//! paths are enumerated depth first and each is checked with [`verify_tutte`].

use super::verify::{verify_tutte, TuttePathCert};
use super::{exhausted, hypothesis, TutteError};
use crate::ham::{ham_paths_within, Constraints};
use crate::plane_graph::{bit, edge, Edge, Graph, VSet};
use serde::Serialize;

/// Nodes the simple-path fallback may visit.
pub const TUTTE_SEARCH_BUDGET: u64 = 20_000_000;

#[derive(Serialize)]
struct Instance<'a> {
    op: &'a str,
    edges: Vec<Edge>,
    outer: &'a [usize],
    ends: (usize, usize),
    through: &'a [Edge],
}

fn live_vertices(g: &Graph) -> VSet {
    (0..g.n()).filter(|&v| g.degree(v) > 0).fold(0, |a, v| a | bit(v))
}

fn check_cycle(g: &Graph, outer: &[usize]) -> Result<(), TutteError> {
    let k = outer.len();
    let distinct = outer.iter().fold(0u64, |a, &v| a | bit(v)).count_ones() as usize == k;
    if k < 3 || !distinct || !(0..k).all(|i| g.has_edge(outer[i], outer[(i + 1) % k])) {
        return Err(hypothesis("outer sequence is not a cycle of the graph"));
    }
    Ok(())
}

/// Index `i` with `{outer[i], outer[i+1]} = e`.
fn edge_slot(outer: &[usize], e: Edge) -> Option<usize> {
    let k = outer.len();
    (0..k).find(|&i| edge(outer[i], outer[(i + 1) % k]) == edge(e.0, e.1))
}

fn search(g: &Graph, a: usize, b: usize, through: &[Edge], designated: &[Edge]) -> Result<Option<TuttePathCert>, TutteError> {
    let live = live_vertices(g);
    let need: Vec<Edge> = through.iter().map(|&(p, q)| edge(p, q)).collect();
    if let Some(p) = ham_paths_within(g, live, a, b, &Constraints::requiring(&need), 1)?.pop() {
        return Ok(Some(verify_tutte(g, &p, designated)?));
    }
    struct Dfs<'a> {
        g: &'a Graph,
        live: VSet,
        b: usize,
        need: &'a [Edge],
        designated: &'a [Edge],
        nodes: u64,
    }
    impl Dfs<'_> {
        fn go(&mut self, path: &mut Vec<usize>, used: VSet) -> Result<Option<TuttePathCert>, TutteError> {
            self.nodes += 1;
            if self.nodes > TUTTE_SEARCH_BUDGET {
                return Err(TutteError::Timeout(TUTTE_SEARCH_BUDGET));
            }
            let last = *path.last().unwrap();
            if last == self.b {
                let has = |e: &Edge| path.windows(2).any(|w| edge(w[0], w[1]) == *e);
                if self.need.iter().all(has) {
                    if let Ok(c) = verify_tutte(self.g, path, self.designated) {
                        return Ok(Some(c));
                    }
                }
                return Ok(None);
            }
            if self.g.reach(bit(last), self.live & !(used & !bit(last))) & bit(self.b) == 0 {
                return Ok(None);
            }
            for w in crate::plane_graph::members(self.g.adj(last) & self.live & !used) {
                path.push(w);
                let r = self.go(path, used | bit(w))?;
                path.pop();
                if r.is_some() {
                    return Ok(r);
                }
            }
            Ok(None)
        }
    }
    let mut dfs = Dfs { g, live, b, need: &need, designated, nodes: 0 };
    dfs.go(&mut vec![a], bit(a))
}

/// A path from `x` to `y` through the outer edge `e` whose bridges have at most three
/// attachments, and at most two when they hold an edge of the outer cycle. `outer`
/// is the outer cycle; vertices of `g` without edges are ignored.
pub fn tutte_path(g: &Graph, outer: &[usize], x: usize, y: usize, e: Edge) -> Result<TuttePathCert, TutteError> {
    check_cycle(g, outer)?;
    let live = live_vertices(g);
    if !outer.contains(&x) || x == y || y >= g.n() || live & bit(y) == 0 {
        return Err(hypothesis("x must lie on the outer cycle and y be another vertex"));
    }
    if edge_slot(outer, e).is_none() {
        return Err(hypothesis("e must be an edge of the outer cycle"));
    }
    let k = outer.len();
    let designated: Vec<Edge> = (0..k).map(|i| edge(outer[i], outer[(i + 1) % k])).collect();
    search(g, x, y, &[e], &designated)?.ok_or_else(|| {
        exhausted(Instance { op: "tutte_path", edges: g.edges(), outer, ends: (x, y), through: &[e] })
    })
}

/// A `u`-`v` path through `e` and `f` that is Tutte for the clockwise arc of the
/// outer cycle from `u` to `v`. `u, e, f, v` must appear in that clockwise order,
/// where `outer` lists the cycle clockwise.
pub fn tutte_path_two_edges(
    g: &Graph,
    outer: &[usize],
    u: usize,
    v: usize,
    e: Edge,
    f: Edge,
) -> Result<TuttePathCert, TutteError> {
    check_cycle(g, outer)?;
    let k = outer.len();
    let pos = |w: usize| outer.iter().position(|&z| z == w);
    let (pu, pv) = match (pos(u), pos(v)) {
        (Some(a), Some(b)) if a != b => (a, b),
        _ => return Err(hypothesis("u and v must be distinct outer vertices")),
    };
    let (se, sf) = match (edge_slot(outer, e), edge_slot(outer, f)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(hypothesis("e and f must be outer edges")),
    };
    let off = |i: usize| (i + k - pu) % k;
    // an edge at slot i spans offsets off(i) and off(i) + 1
    if !(off(se) <= off(sf) && off(sf) < off(pv)) {
        return Err(TutteError::BadOrder);
    }
    let arc: Vec<Edge> = (0..off(pv)).map(|j| edge(outer[(pu + j) % k], outer[(pu + j + 1) % k])).collect();
    search(g, u, v, &[e, f], &arc)?.ok_or_else(|| {
        exhausted(Instance { op: "tutte_path_two_edges", edges: g.edges(), outer, ends: (u, v), through: &[e, f] })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::k4;

    fn cycle(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    #[test]
    fn bare_cycle() {
        let g = cycle(5);
        let outer = [0, 1, 2, 3, 4];
        let p = tutte_path(&g, &outer, 0, 1, (2, 3)).unwrap();
        assert_eq!(p.path, vec![0, 4, 3, 2, 1]);
        let q = tutte_path_two_edges(&g, &outer, 0, 4, (1, 2), (2, 3)).unwrap();
        assert_eq!(q.path, vec![0, 1, 2, 3, 4]);
        assert_eq!(tutte_path_two_edges(&g, &outer, 0, 2, (2, 3), (0, 1)), Err(TutteError::BadOrder));
    }

    #[test]
    fn k4_outer_triangle() {
        let pg = k4();
        let g = pg.graph();
        let outer = pg.faces()[0].clone();
        let (x, y) = (outer[0], outer[1]);
        let p = tutte_path(g, &outer, x, y, edge(outer[1], outer[2])).unwrap();
        assert_eq!(p.path.len(), 4);
    }

    #[test]
    fn wheel_two_edges() {
        // rim 0..6 clockwise around hub 6
        let g = Graph::from_edges(7, (0..6).flat_map(|i| [(i, (i + 1) % 6), (i, 6)]));
        let outer = [0, 1, 2, 3, 4, 5];
        let p = tutte_path_two_edges(&g, &outer, 0, 4, (1, 2), (2, 3)).unwrap();
        assert!(p.contains_edge(1, 2) && p.contains_edge(2, 3));
        assert_eq!((p.path[0], *p.path.last().unwrap()), (0, 4));
    }
}
