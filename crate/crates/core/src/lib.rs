//! Structural graph toolkit around K5 subdivisions in 5-connected
//! nonplanar graphs: disjoint-path dichotomies, disc embeddings and
//! 3-planar societies, bridges and chains of blocks, nonseparating-path
//! rerouting, and certified TK5 / K4-minus search, culminating in a
//! classifier that returns one of four verified structural outcomes.
//!
//! Every search result is re-verified by an independent checker before
//! it is returned; searches are exhaustive at the small scales this
//! crate targets, and long-running cores take cooperative deadlines.

pub mod bridges;
pub mod connectivity;
pub mod exec;
pub mod graph;
pub mod linkage;
pub mod nonsep;
pub mod pipeline;
pub mod planarity;
pub mod subdivision;

pub use exec::{Deadline, ExecMode};
pub use graph::{build_graph, contract_subgraph, Graph, GraphError, PathSeq, CycleSeq, Separation, VertexId};
