//! Outer walks of induced subgraphs of a near triangulation.

use super::{hypothesis, TutteError};
use crate::plane_graph::{bit, NearTriangulation, PlaneGraph, VSet};

/// The outer walk of `plane[keep]`, in `plane` ids and clockwise: the face of the
/// induced embedding whose region holds the outer face of `plane`.
pub fn outer_walk(plane: &PlaneGraph, keep: VSet) -> Result<Vec<usize>, TutteError> {
    let target = plane.outer_face().ok_or_else(|| hypothesis("outer face not designated"))?;
    let g = plane.graph();
    let kept = |a: usize, b: usize| keep & bit(a) != 0 && keep & bit(b) != 0;
    let (sub, labels) = plane.induced(keep)?;
    for f in sub.faces() {
        let walk: Vec<usize> = f.iter().map(|&v| labels[v]).collect();
        let k = walk.len();
        // original faces left of the walk's darts, grown across edges the subgraph lost
        let mut seen = vec![false; plane.faces().len()];
        let mut stack: Vec<usize> = (0..k)
            .filter_map(|i| plane.face_of_dart(walk[i], walk[(i + 1) % k]))
            .collect();
        while let Some(face) = stack.pop() {
            if std::mem::replace(&mut seen[face], true) {
                continue;
            }
            let seq = &plane.faces()[face];
            for i in 0..seq.len() {
                let (a, b) = (seq[i], seq[(i + 1) % seq.len()]);
                if !(kept(a, b) && g.has_edge(a, b)) {
                    stack.extend(plane.face_of_dart(b, a));
                }
            }
        }
        if seen[target] {
            return Ok(walk);
        }
    }
    Err(hypothesis(format!("no face of the subgraph on {keep:#x} holds the outer face")))
}

pub fn outer_walk_within(nt: &NearTriangulation, keep: VSet) -> Result<Vec<usize>, TutteError> {
    outer_walk(&nt.plane, keep)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::octahedron;
    use crate::plane_graph::{bit, set_of};

    #[test]
    fn octahedron_minus_apex() {
        let o = octahedron();
        let f = o.find_face_either(&[0, 1, 5]).unwrap();
        let o = o.with_outer_face(f).unwrap();
        // dropping an outer apex leaves the wheel around 4, bounded by the rim
        let keep = o.graph().vertices() & !bit(5);
        let walk = outer_walk(&o, keep).unwrap();
        assert_eq!(set_of(walk.iter().copied()), set_of([0, 1, 2, 3]));
        // dropping 4 instead punches a hole; the outer walk stays the old outer face
        let walk = outer_walk(&o, o.graph().vertices() & !bit(4)).unwrap();
        assert_eq!(set_of(walk.iter().copied()), set_of([0, 1, 5]));
        // a single edge is its own walk
        assert_eq!(outer_walk(&o, set_of([0, 1])).unwrap().len(), 2);
    }
}
