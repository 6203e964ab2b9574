//! Hamiltonian cycles in 4-connected planar triangulations: generation, structure
//! search, Tutte-path constructions and exhaustive verification.

pub mod corpus;
pub mod ham;
pub mod indset;
pub mod plane_graph;
pub mod replay;
pub mod structures;
pub mod tutte;
