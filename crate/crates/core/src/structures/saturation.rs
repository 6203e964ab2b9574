//! Saturation of short cycles and diamond-6-cycles by an independent set.

use super::diamond::{DiamondCert, DiamondKind};
use crate::plane_graph::{set_of, Graph, VSet};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SaturationError {
    #[error("the vertex set is not independent")]
    SNotIndependent,
    #[error("saturation is defined for 4-/5-cycles and diamond-6-cycles only")]
    UnsupportedObject,
}

#[derive(Clone, Copy, Debug)]
pub enum SatObject<'a> {
    Cycle(&'a [usize]),
    Diamond6(&'a DiamondCert),
}

/// A 4- or 5-cycle is saturated when it holds exactly two members of `s`; a
/// diamond-6-cycle when at least three of its crucial vertices are in `s`.
pub fn saturates(g: &Graph, s: VSet, object: SatObject) -> Result<bool, SaturationError> {
    if !g.is_independent(s) {
        return Err(SaturationError::SNotIndependent);
    }
    Ok(match object {
        SatObject::Cycle(c) if c.len() == 4 || c.len() == 5 => (set_of(c.iter().copied()) & s).count_ones() == 2,
        SatObject::Diamond6(d) if d.kind == DiamondKind::Diamond6 => (d.crucial_set() & s).count_ones() >= 3,
        _ => return Err(SaturationError::UnsupportedObject),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus::octahedron;

    #[test]
    fn cycle_saturation() {
        let g = octahedron();
        let g = g.graph();
        // rim 0..=3, apexes 4 and 5
        let c = [4, 0, 5, 2];
        assert_eq!(saturates(g, set_of([0, 2]), SatObject::Cycle(&c)), Ok(true));
        assert_eq!(saturates(g, set_of([0]), SatObject::Cycle(&c)), Ok(false));
        assert_eq!(saturates(g, set_of([0, 1]), SatObject::Cycle(&c)), Err(SaturationError::SNotIndependent));
    }

    #[test]
    fn diamond6_needs_three_crucial() {
        let d = DiamondCert {
            kind: DiamondKind::Diamond6,
            vertices: (0..9).collect(),
            crucial: vec![3, 4, 5, 6, 7, 8],
            outer_cycle: vec![0, 3, 1, 5, 2, 7],
        };
        let g = Graph::empty(9);
        assert_eq!(saturates(&g, set_of([3, 5]), SatObject::Diamond6(&d)), Ok(false));
        assert_eq!(saturates(&g, set_of([3, 5, 7]), SatObject::Diamond6(&d)), Ok(true));
    }
}
