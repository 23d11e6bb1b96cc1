//! Explicit resolving-set constructions, bounds and closed-form reference
//! values for line graphs.

mod bounds;
mod in_edges;
mod reference;
mod tree;

pub use bounds::{
    bfs_spanning_tree, line_dimension_bounds, log2_lower_bound, spanning_tree_landmarks,
    spanning_tree_resolving_set, BoundsReport,
};
pub use in_edges::{in_edge_deletion_set, in_edge_deletion_set_with};
pub use reference::{known_line_mu, LineFamily};
pub use tree::{
    tree_line_metric_dimension, tree_line_metric_dimension_with, tree_metric_dimension,
    tree_profile, TreeLineDimension, TreeProfile,
};
