//! Graphs, plane embeddings and the structural operations used everywhere else.

pub mod bridges;
pub mod canon;
pub mod connectivity;
pub mod embed;
pub mod graph;

pub use bridges::{bridges, path_bridges, Bridge, BridgeDecomposition};
pub use canon::{canonical_code, canonical_form, from_code, same_up_to_mirror};
pub use connectivity::{block_chain, blocks, is_k_connected, vertex_connectivity, BlockChain, ChainError};
pub use embed::{trace_faces, Contraction, EmbeddingError, NearTriangulation, PlaneGraph, PlaneRecord, Side};
pub use graph::{bit, edge, full_set, members, set_of, Edge, Graph, VSet, MAX_VERTICES};
