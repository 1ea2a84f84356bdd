//! Exact subtree statistics of graphs.
//!
//! Subtree counts by order, the mean subtree order `μ(G)` and its local
//! variants, the spanning fraction and the average connected-set size, all in
//! exact integer and rational arithmetic, plus a harness of checks over
//! single graphs and graph streams.

pub mod canon;
pub mod census;
pub mod closed_forms;
pub mod error;
pub mod families;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod matching;
pub mod matrix_tree;
pub mod numeric;
pub mod oracle;

pub use census::{
    average_connected_set_size, census, census_containing, mu, mu_at_edge, mu_at_tree, mu_at_vertex,
    spanning_fraction, RootConstraint, SubtreeCensus,
};
pub use error::{Error, Result};
pub use families::{build_family, FamilySpec};
pub use graph::{Edge, Graph, VertexSet};
pub use graph6::{from_graph6, read_graph6_lines, to_graph6};
pub use matrix_tree::spanning_tree_count;
pub use numeric::{Count, Ratio};
