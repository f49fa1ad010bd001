//! Constructions, certificates and exact oracles for generalized
//! Erdős–Rogers functions `f_{F,G}(n)`: the largest `m` such that every
//! `n`-vertex `G`-free graph has an induced `F`-free subgraph on `m` vertices.

pub mod blowup;
pub mod certificate;
pub mod efr;
pub mod error;
pub mod graph;
pub mod hom;
pub mod hypergraph;
pub mod io;
pub mod pipelines;
pub mod rng;
pub mod search;
pub mod subgraph;
pub mod vertex_set;

pub use certificate::{Certificate, Verdict};
pub use error::{Error, Result, Witness};
pub use graph::Graph;
pub use hypergraph::{Audit, Hypergraph};
pub use rng::SeededRng;
pub use subgraph::{Budget, Embedding};
pub use vertex_set::VertexSet;
