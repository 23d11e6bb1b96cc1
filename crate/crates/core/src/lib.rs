//! Resolving sets and metric dimension for graphs, digraphs and their line
//! graphs.
//!
//! The crate pairs explicit constructions of resolving sets (in-edge deletion
//! for line digraphs, spanning-tree landmarks for line graphs, terminal
//! vertices for trees) with an exact exhaustive solver that serves as their
//! oracle. Generators for de Bruijn and Kautz digraphs and a small edge-list
//! format round out the toolkit.

pub mod certificate;
pub mod constructions;
pub mod error;
pub mod graph;
pub mod graph_file;
pub mod line_graph;
pub mod metric;
pub mod topologies;

pub use error::{Error, Result};
pub use graph::{DiGraph, DistanceMatrix, Graph};
pub use line_graph::LineGraphMap;
pub use metric::{ResolvingCertificate, SolverConfig, TwinPartition};
