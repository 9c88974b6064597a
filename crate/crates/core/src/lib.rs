//! Graph algorithms for plane triangulations at desk scale: combinatorial
//! embeddings and duals, path/tree vertex partitions of cubic graphs,
//! Hamiltonian cycle search, spanning 2-trees, handle operations, and
//! spanning maximal 2-degenerate subgraphs — all as exact, certificate-
//! producing decision procedures.

pub mod canon;
pub mod embed;
pub mod families;
pub mod graph;
pub mod graph6;
pub mod partition;

pub use canon::{are_isomorphic, canonical_form, CanonicalForm};
pub use embed::{CycleSide, EmbedError, EmbeddedGraph, Face, HamiltonianDual, SidePart};
pub use graph::{Edge, Graph, GraphError, HamCycle, InducedShape, VertexId};
