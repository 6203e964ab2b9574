//! Hamiltonian cycles through two edges of one triangle and one edge of each of two others.

use super::{exhausted, hypothesis, TutteError};
use crate::ham::{find_ham_cycle, Constraints, HamCycle};
use crate::plane_graph::{edge, Edge, Graph};
use crate::structures::has_separating_triangle;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TriangleCycle {
    pub cycle: HamCycle,
    pub e1: Edge,
    pub e2: Edge,
}

fn triangle_edges(g: &Graph, t: [usize; 3]) -> Result<[Edge; 3], TutteError> {
    let [a, b, c] = t;
    let es = [edge(a, b), edge(a, c), edge(b, c)];
    if a == b || b == c || a == c || !es.iter().all(|&(p, q)| g.has_edge(p, q)) {
        return Err(hypothesis(format!("{t:?} is not a triangle")));
    }
    Ok(es)
}

fn key(t: [usize; 3]) -> [usize; 3] {
    let mut k = t;
    k.sort_unstable();
    k
}

/// A Hamiltonian cycle through `uv` and `uw` (with `t = [u, v, w]`), an edge `e1` of
/// `t1` and an edge `e2` of `t2`, all four distinct. Edge choices are tried in
/// ascending order.
pub fn ham_cycle_through_triangle_edges(g: &Graph, t: [usize; 3], t1: [usize; 3], t2: [usize; 3]) -> Result<TriangleCycle, TutteError> {
    triangle_edges(g, t)?;
    let c1 = triangle_edges(g, t1)?;
    let c2 = triangle_edges(g, t2)?;
    if key(t) == key(t1) || key(t) == key(t2) || key(t1) == key(t2) {
        return Err(hypothesis("the three triangles must be distinct"));
    }
    if has_separating_triangle(g) {
        return Err(hypothesis("separating triangle"));
    }
    let [u, v, w] = t;
    let (uv, uw) = (edge(u, v), edge(u, w));
    for &e1 in &c1 {
        for &e2 in &c2 {
            let four = [uv, uw, e1, e2];
            if (0..4).any(|i| (i + 1..4).any(|j| four[i] == four[j])) {
                continue;
            }
            if let Some(cycle) = find_ham_cycle(g, &Constraints::requiring(&four))? {
                return Ok(TriangleCycle { cycle, e1, e2 });
            }
        }
    }
    Err(exhausted(("ham_cycle_through_triangle_edges", g.edges(), t, t1, t2)))
}
