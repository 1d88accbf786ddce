//! Exact toughness, connectivity and circumference of small graphs, a
//! longest-cycle improvement engine built from cycle-splicing moves, and
//! checkers for circumference lower bounds over graph corpora.

pub mod cli;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod invariants;
pub mod surgery;
pub mod verifier;

pub use graph::{Graph, GraphError, VertexSet};
pub use graph6::{encode_graph6, parse_graph6, Graph6Error};
