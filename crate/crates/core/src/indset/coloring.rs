//! Exact 4-colouring by DSATUR-ordered backtracking.

use super::IndSetError;
use crate::plane_graph::{bit, members, Graph, VSet};

pub const COLORS: usize = 4;

/// Default number of search nodes before giving up.
pub const DEFAULT_COLORING_BUDGET: u64 = 50_000_000;

/// Colours `g[within]` with at most four colours. Returns one colour class per colour.
pub fn four_color_within(g: &Graph, within: VSet, budget: u64) -> Result<[VSet; COLORS], IndSetError> {
    let mut classes = [0 as VSet; COLORS];
    let mut nodes = 0u64;
    if color_rec(g, within, &mut classes, &mut nodes, budget)? {
        Ok(classes)
    } else {
        // planar inputs never land here; other graphs may
        Err(IndSetError::NotFourColorable)
    }
}

fn color_rec(g: &Graph, left: VSet, classes: &mut [VSet; COLORS], nodes: &mut u64, budget: u64) -> Result<bool, IndSetError> {
    if left == 0 {
        return Ok(true);
    }
    *nodes += 1;
    if *nodes > budget {
        return Err(IndSetError::ColoringTimeout(budget));
    }
    // most saturated uncoloured vertex, then most uncoloured neighbours, then lowest id
    let pick = members(left)
        .max_by_key(|&v| {
            let sat = classes.iter().filter(|&&c| g.adj(v) & c != 0).count();
            let free = (g.adj(v) & left).count_ones();
            (sat, free, std::cmp::Reverse(v))
        })
        .unwrap();
    let mut tried_empty = false;
    for c in 0..COLORS {
        if g.adj(pick) & classes[c] != 0 {
            continue;
        }
        // empty classes are interchangeable
        if classes[c] == 0 {
            if tried_empty {
                continue;
            }
            tried_empty = true;
        }
        classes[c] |= bit(pick);
        if color_rec(g, left & !bit(pick), classes, nodes, budget)? {
            return Ok(true);
        }
        classes[c] &= !bit(pick);
    }
    Ok(false)
}

/// Vertices of degree at most `cap`.
pub fn low_degree_vertices(g: &Graph, cap: usize) -> VSet {
    members(g.vertices()).filter(|&v| g.degree(v) <= cap).fold(0, |acc, v| acc | bit(v))
}

/// Largest colour class of a 4-colouring of the degree-at-most-6 vertices; ties go to
/// the class with the least smallest member.
pub fn largest_low_degree_class(g: &Graph, budget: u64) -> Result<VSet, IndSetError> {
    let low = low_degree_vertices(g, 6);
    let classes = four_color_within(g, low, budget)?;
    let best = classes.iter().copied().max_by_key(|&c| (c.count_ones(), std::cmp::Reverse(c.trailing_zeros()))).unwrap();
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::{double_wheel, icosahedron, octahedron};

    fn proper(g: &Graph, within: VSet, classes: &[VSet; COLORS]) -> bool {
        classes.iter().fold(0, |a, c| a | c) == within && classes.iter().all(|&c| g.is_independent(c))
    }

    #[test]
    fn colours_named_graphs() {
        for pg in [octahedron(), icosahedron(), double_wheel(11).unwrap()] {
            let g = pg.graph();
            let cl = four_color_within(g, g.vertices(), DEFAULT_COLORING_BUDGET).unwrap();
            assert!(proper(g, g.vertices(), &cl));
        }
    }

    #[test]
    fn k5_is_not_four_colourable() {
        let mut g = Graph::empty(5);
        for a in 0..5 {
            for b in a + 1..5 {
                g.add_edge(a, b);
            }
        }
        assert_eq!(four_color_within(&g, g.vertices(), 1000), Err(IndSetError::NotFourColorable));
    }
}
