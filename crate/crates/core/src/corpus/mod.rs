//! Graph instances: named families, exhaustive and random generation, planar_code I/O.

pub mod enumerate;
pub mod filter;
pub mod named;
pub mod planar_code;
pub mod random;

pub use enumerate::{
    enumerate_range, enumerate_triangulations, enumerate_with_budget, split_vertex, GenerationError, Levels, DEFAULT_MAX_N,
};
pub use filter::{ConfigError, CorpusFilter, FilterError, GeneratorConfig};
pub use named::{double_wheel, icosahedron, k4, octahedron, NamedGraphError};
pub use planar_code::{PlanarCodeError, PlanarCodeReader, PlanarCodeWriter};
pub use random::random_triangulation;
