//! Canonical codes for connected plane graphs.
//!
//! A code is produced by a breadth-first walk of the rotation system from a start
//! dart: each vertex is labelled on first sight, and each visited vertex emits the
//! labels of its neighbours read around it starting from the dart it was reached by.
//! The canonical code is the lexicographically least code over all start darts at
//! minimum-degree vertices. With `mirror`, counter-clockwise readings are also
//! tried, so mirror images share a code. For 3-connected graphs (in particular
//! triangulations) the embedding is unique up to mirroring, hence equal codes with
//! `mirror` is exactly graph isomorphism.

use super::embed::PlaneGraph;
use std::cmp::Ordering;

/// Emits the code from dart `start -> rotation[start][first]`. Stops as soon as the
/// partial code exceeds `best`. Returns `None` in that case.
fn code_from(pg: &PlaneGraph, start: usize, first: usize, backwards: bool, best: &[u8]) -> Option<Vec<u8>> {
    let n = pg.n();
    let mut label = vec![0u8; n];
    let mut came_from = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    let mut out = Vec::with_capacity(2 * pg.edge_count() + n + 1);
    let mut state = if best.is_empty() { Ordering::Less } else { Ordering::Equal };
    let push = |out: &mut Vec<u8>, x: u8, state: &mut Ordering| -> bool {
        if *state == Ordering::Equal {
            *state = x.cmp(&best[out.len()]);
        }
        out.push(x);
        *state != Ordering::Greater
    };
    if !push(&mut out, n as u8, &mut state) {
        return None;
    }
    label[start] = 1;
    order.push(start);
    came_from[start] = pg.rotation(start)[first];
    let mut next_label = 2u8;
    let mut head = 0;
    while head < order.len() {
        let a = order[head];
        head += 1;
        let rot = pg.rotation(a);
        let d = rot.len();
        let s = rot.iter().position(|&w| w == came_from[a]).expect("neighbour");
        for j in 0..d {
            let idx = if backwards { (s + d - j) % d } else { (s + j) % d };
            let w = rot[idx];
            if label[w] == 0 {
                label[w] = next_label;
                next_label += 1;
                came_from[w] = a;
                order.push(w);
            }
            if !push(&mut out, label[w], &mut state) {
                return None;
            }
        }
        if !push(&mut out, 0, &mut state) {
            return None;
        }
    }
    (state == Ordering::Less).then_some(out)
}

/// Canonical code of a connected plane graph.
pub fn canonical_code(pg: &PlaneGraph, mirror: bool) -> Vec<u8> {
    let g = pg.graph();
    let delta = g.min_degree();
    let mut best: Vec<u8> = Vec::new();
    for v in (0..pg.n()).filter(|&v| g.degree(v) == delta) {
        for i in 0..pg.rotation(v).len() {
            for &backwards in if mirror { &[false, true][..] } else { &[false][..] } {
                if let Some(code) = code_from(pg, v, i, backwards, &best) {
                    best = code;
                }
            }
        }
    }
    best
}

/// Rebuilds the plane graph encoded by a canonical code. Vertex `i` of the result
/// is the vertex labelled `i + 1` in the code; decoding a canonical code therefore
/// yields the canonically labelled representative.
pub fn from_code(code: &[u8]) -> Option<PlaneGraph> {
    let (&n, rest) = code.split_first()?;
    let mut rot = Vec::with_capacity(n as usize);
    let mut current = Vec::new();
    for &x in rest {
        if x == 0 {
            rot.push(std::mem::take(&mut current));
        } else {
            current.push(x as usize - 1);
        }
    }
    if !current.is_empty() || rot.len() != n as usize {
        return None;
    }
    PlaneGraph::from_rotation(rot).ok()
}

/// Canonical code plus the canonically labelled representative.
pub fn canonical_form(pg: &PlaneGraph) -> (Vec<u8>, PlaneGraph) {
    let code = canonical_code(pg, true);
    let rep = from_code(&code).expect("canonical code decodes");
    (code, rep)
}

/// Isomorphism of plane graphs up to mirroring; equals graph isomorphism when both
/// are 3-connected.
pub fn same_up_to_mirror(a: &PlaneGraph, b: &PlaneGraph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_code(a, true) == canonical_code(b, true)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn octahedron() -> PlaneGraph {
        // poles 0 and 5, equator 1..=4
        PlaneGraph::from_rotation(vec![
            vec![1, 2, 3, 4],
            vec![0, 4, 5, 2],
            vec![0, 1, 5, 3],
            vec![0, 2, 5, 4],
            vec![0, 3, 5, 1],
            vec![1, 4, 3, 2],
        ])
        .unwrap()
    }

    fn relabel(pg: &PlaneGraph, perm: &[usize]) -> PlaneGraph {
        let mut rot = vec![Vec::new(); pg.n()];
        for v in 0..pg.n() {
            rot[perm[v]] = pg.rotation(v).iter().map(|&w| perm[w]).collect();
        }
        PlaneGraph::from_rotation(rot).unwrap()
    }

    #[test]
    fn code_is_label_invariant() {
        let o = octahedron();
        let p = relabel(&o, &[3, 0, 5, 1, 4, 2]);
        assert_eq!(canonical_code(&o, false), canonical_code(&p, false));
        assert!(same_up_to_mirror(&o, &o.mirror()));
    }

    #[test]
    fn decoding_gives_an_isomorphic_copy() {
        let o = octahedron();
        let (code, rep) = canonical_form(&o);
        assert_eq!(canonical_code(&rep, true), code);
        assert!(from_code(&code[..code.len() - 1]).is_none());
    }

    #[test]
    fn code_length_is_n_plus_two_e_plus_one() {
        let o = octahedron();
        assert_eq!(canonical_code(&o, true).len(), 1 + 6 + 24);
    }
}
