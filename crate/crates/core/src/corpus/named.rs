//! Small named triangulations.

use crate::plane_graph::{EmbeddingError, PlaneGraph};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NamedGraphError {
    #[error("double wheel needs at least 6 vertices, got {0}")]
    TooSmall(usize),
    #[error("double wheel with {0} vertices exceeds the vertex limit")]
    TooLarge(usize),
}

pub fn k4() -> PlaneGraph {
    PlaneGraph::from_rotation(vec![vec![1, 2, 3], vec![0, 3, 2], vec![0, 1, 3], vec![0, 2, 1]])
        .expect("K4 rotation")
}

/// Rim cycle `0..n-2`, apexes `n-2` and `n-1`.
pub fn double_wheel(n: usize) -> Result<PlaneGraph, NamedGraphError> {
    if n < 6 {
        return Err(NamedGraphError::TooSmall(n));
    }
    let rim = n - 2;
    let (a, b) = (rim, rim + 1);
    let mut faces = Vec::with_capacity(2 * rim);
    for i in 0..rim {
        let j = (i + 1) % rim;
        faces.push(vec![a, i, j]);
        faces.push(vec![b, j, i]);
    }
    PlaneGraph::from_faces(n, &faces).map_err(|e| match e {
        EmbeddingError::BadSize(_) => NamedGraphError::TooLarge(n),
        other => panic!("double wheel construction failed: {other}"),
    })
}

pub fn octahedron() -> PlaneGraph {
    double_wheel(6).expect("n = 6")
}

/// Vertex 0 on top, upper ring 1..=5, lower ring 6..=10, vertex 11 at the bottom.
pub fn icosahedron() -> PlaneGraph {
    let up = |i: usize| 1 + i % 5;
    let lo = |i: usize| 6 + i % 5;
    let mut faces = Vec::with_capacity(20);
    for i in 0..5 {
        faces.push(vec![0, up(i), up(i + 1)]);
        faces.push(vec![up(i), lo(i), up(i + 1)]);
        faces.push(vec![up(i + 1), lo(i), lo(i + 1)]);
        faces.push(vec![11, lo(i + 1), lo(i)]);
    }
    PlaneGraph::from_faces(12, &faces).expect("icosahedron faces")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane_graph::is_k_connected;

    #[test]
    fn double_wheel_degrees() {
        let g = double_wheel(8).unwrap();
        assert!(g.is_triangulation());
        assert_eq!(g.graph().degree(6), 6);
        assert_eq!(g.graph().degree(7), 6);
        assert!((0..6).all(|v| g.graph().degree(v) == 4));
        assert!(is_k_connected(g.graph(), 4));
        assert_eq!(double_wheel(5), Err(NamedGraphError::TooSmall(5)));
    }

    #[test]
    fn octahedron_is_k222() {
        let g = octahedron();
        // complement is a perfect matching
        for v in 0..6 {
            assert_eq!(g.graph().degree(v), 4);
        }
        assert!(!g.graph().has_edge(4, 5));
    }

    #[test]
    fn icosahedron_is_5_regular_and_5_connected() {
        let g = icosahedron();
        assert!(g.is_triangulation());
        assert_eq!(g.edge_count(), 30);
        assert!((0..12).all(|v| g.graph().degree(v) == 5));
        assert!(is_k_connected(g.graph(), 5));
        assert!(k4().is_triangulation());
    }
}
