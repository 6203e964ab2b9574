//! Short cycles and separating cycles.

use crate::plane_graph::{bit, full_set, members, set_of, Graph, VSet};

/// All cycles of length `k` inside `within`, each listed once: smallest vertex
/// first, and the second vertex smaller than the last.
pub fn cycles_within(g: &Graph, k: usize, within: VSet) -> Vec<Vec<usize>> {
    assert!(k >= 3, "cycles have length at least 3");
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(k);
    fn extend(g: &Graph, k: usize, within: VSet, path: &mut Vec<usize>, used: VSet, out: &mut Vec<Vec<usize>>) {
        let start = path[0];
        let last = *path.last().unwrap();
        if path.len() == k {
            if g.has_edge(last, start) && path[1] < last {
                out.push(path.clone());
            }
            return;
        }
        // only vertices above the start keep each cycle rooted at its minimum
        let above = !full_set(start + 1);
        for w in members(g.adj(last) & within & above & !used) {
            path.push(w);
            extend(g, k, within, path, used | bit(w), out);
            path.pop();
        }
    }
    for s in members(within) {
        path.clear();
        path.push(s);
        extend(g, k, within, &mut path, bit(s), &mut out);
    }
    out
}

pub fn cycles_of_length(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    cycles_within(g, k, g.vertices())
}

/// True when deleting the vertices of `cycle` leaves a disconnected (nonempty) graph.
pub fn is_separating(g: &Graph, cycle: &[usize]) -> bool {
    let rest = g.vertices() & !set_of(cycle.iter().copied());
    rest != 0 && !g.is_connected_within(rest)
}

/// Separating cycles of length `k` (3, 4 or 5).
pub fn separating_cycles(g: &Graph, k: usize) -> Vec<Vec<usize>> {
    assert!((3..=5).contains(&k), "separating cycle length must be 3, 4 or 5");
    cycles_of_length(g, k).into_iter().filter(|c| is_separating(g, c)).collect()
}

pub fn has_separating_triangle(g: &Graph) -> bool {
    !separating_cycles(g, 3).is_empty()
}

/// Vertices adjacent to at least three vertices of some separating 4-cycle (not on it).
pub fn three_adjacent_to_separating_4cycles(g: &Graph) -> VSet {
    let mut out = 0;
    for c in separating_cycles(g, 4) {
        let cs = set_of(c.iter().copied());
        for v in members(g.vertices() & !cs) {
            if (g.adj(v) & cs).count_ones() >= 3 {
                out |= bit(v);
            }
        }
    }
    out
}

/// Vertices lying on some separating 4-cycle.
pub fn on_separating_4cycles(g: &Graph) -> VSet {
    separating_cycles(g, 4).iter().fold(0, |acc, c| acc | set_of(c.iter().copied()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{double_wheel, k4, octahedron};

    #[test]
    fn k4_has_three_four_cycles() {
        assert_eq!(cycles_of_length(k4().graph(), 4).len(), 3);
        assert_eq!(cycles_of_length(k4().graph(), 3).len(), 4);
        assert!(!has_separating_triangle(k4().graph()));
    }

    #[test]
    fn double_wheel_separating_squares() {
        assert_eq!(separating_cycles(octahedron().graph(), 4).len(), 3);
        let g = double_wheel(8).unwrap();
        assert_eq!(separating_cycles(g.graph(), 4).len(), 9);
        assert!(separating_cycles(g.graph(), 3).is_empty());
        // every vertex lies on one of them
        assert_eq!(on_separating_4cycles(g.graph()), g.graph().vertices());
    }
}
