//! Exhaustive generation of triangulations up to isomorphism.
//!
//! Every triangulation on `n >= 5` vertices has an edge in no separating triangle;
//! contracting it gives a triangulation on `n - 1` vertices. The inverse operation
//! splits a vertex `v` along two of its neighbours, so all classes on `n` vertices
//! arise by splitting every vertex of every class on `n - 1` vertices in every way,
//! starting from K4. Classes are deduplicated by canonical code.

use super::filter::CorpusFilter;
use super::named::k4;
use crate::plane_graph::{canonical_code, from_code, PlaneGraph};
use std::collections::BTreeSet;
use thiserror::Error;

pub const DEFAULT_MAX_N: usize = 14;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenerationError {
    #[error("n = {n} exceeds the enumeration budget of {max}")]
    BudgetExceeded { n: usize, max: usize },
    #[error("triangulations need at least 4 vertices here, got {0}")]
    TooSmall(usize),
    #[error("no sample satisfied the filter within {attempts} attempts")]
    FilterUnsatisfiableTimeout { attempts: usize },
}

/// Splits `v` so that the new vertex (id `n`) takes the clockwise arc of neighbours
/// from position `i` to position `j`, both ends shared with `v`.
pub fn split_vertex(g: &PlaneGraph, v: usize, i: usize, j: usize) -> PlaneGraph {
    let rot = g.rotation(v);
    let d = rot.len();
    assert!(i < d && j < d && i != j, "bad split positions");
    let fresh = g.n();
    let span = (j + d - i) % d;
    let arc: Vec<usize> = (0..=span).map(|k| rot[(i + k) % d]).collect();
    let rest: Vec<usize> = (0..=(d - span)).map(|k| rot[(j + k) % d]).collect();
    let (wi, wj) = (rot[i], rot[j]);
    let mut table: Vec<Vec<usize>> = g.rotations().to_vec();
    for &w in &arc[1..arc.len() - 1] {
        for x in table[w].iter_mut() {
            if *x == v {
                *x = fresh;
            }
        }
    }
    // around wi the arc side precedes v; around wj it follows v
    let p = table[wi].iter().position(|&x| x == v).unwrap();
    table[wi].insert(p, fresh);
    let q = table[wj].iter().position(|&x| x == v).unwrap();
    table[wj].insert(q + 1, fresh);
    let mut mine = rest;
    mine.push(fresh);
    table[v] = mine;
    let mut theirs = arc;
    theirs.push(v);
    table.push(theirs);
    PlaneGraph::from_rotation(table).expect("vertex split keeps a triangulation")
}

/// Canonical codes of all triangulations on `n` vertices, one level at a time.
#[derive(Clone, Debug)]
pub struct Levels {
    n: usize,
    codes: BTreeSet<Vec<u8>>,
}

impl Default for Levels {
    fn default() -> Self {
        Self::new()
    }
}

impl Levels {
    pub fn new() -> Self {
        let mut codes = BTreeSet::new();
        codes.insert(canonical_code(&k4(), true));
        Levels { n: 4, codes }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.codes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.codes.is_empty()
    }

    /// Canonically labelled representatives in ascending code order.
    pub fn graphs(&self) -> impl Iterator<Item = PlaneGraph> + '_ {
        self.codes.iter().map(|c| from_code(c).expect("stored code decodes"))
    }

    pub fn advance(&mut self) {
        let mut next = BTreeSet::new();
        for g in self.graphs() {
            for v in 0..g.n() {
                let d = g.rotation(v).len();
                for i in 0..d {
                    // (i, j) and (j, i) give the same graph with the two halves renamed
                    for j in (i + 1)..d {
                        next.insert(canonical_code(&split_vertex(&g, v, i, j), true));
                    }
                }
            }
        }
        self.codes = next;
        self.n += 1;
    }
}

/// All triangulations on `n` vertices passing `filter`, up to isomorphism.
pub fn enumerate_triangulations(n: usize, filter: &CorpusFilter) -> Result<Vec<PlaneGraph>, GenerationError> {
    enumerate_with_budget(n, filter, DEFAULT_MAX_N)
}

pub fn enumerate_with_budget(
    n: usize,
    filter: &CorpusFilter,
    max_n: usize,
) -> Result<Vec<PlaneGraph>, GenerationError> {
    Ok(enumerate_range(n, n, filter, max_n)?.pop().unwrap_or_default())
}

/// One list per `n` in `lo..=hi`, sharing the level-by-level generation.
pub fn enumerate_range(
    lo: usize,
    hi: usize,
    filter: &CorpusFilter,
    max_n: usize,
) -> Result<Vec<Vec<PlaneGraph>>, GenerationError> {
    if lo < 4 {
        return Err(GenerationError::TooSmall(lo));
    }
    if hi > max_n {
        return Err(GenerationError::BudgetExceeded { n: hi, max: max_n });
    }
    let mut levels = Levels::new();
    let mut out = Vec::new();
    while levels.n() <= hi {
        if levels.n() >= lo {
            out.push(levels.graphs().filter(|g| filter.accepts(g)).collect());
        }
        if levels.n() < hi {
            levels.advance();
        } else {
            break;
        }
    }
    Ok(out)
}
