//! Bottleneck Steiner trees with a bounded number of Steiner points.
//!
//! Given terminals `P`, candidate Steiner points `S` in the plane and a
//! budget `k`, find a tree spanning `P` that uses at most `k` points of `S`
//! and whose longest edge is as short as possible. The problem is NP-hard;
//! [`solve_sweep`] and [`solve_bisect`] return a tree whose longest edge is
//! at most twice the optimum, and [`solve_exact`] computes the optimum by
//! exhaustive search for small instances.
//!
//! ```
//! use bottleneck_steiner::{parse_instance, solve_exact, solve_sweep};
//!
//! let inst = parse_instance("k 1\nT 0 0\nT 10 0\nS 5 0\n").unwrap();
//! let approx = solve_sweep(&inst).unwrap();
//! let exact = solve_exact(&inst).unwrap();
//! assert_eq!(approx.tree.bottleneck, 10.0);
//! assert_eq!(exact.optimum_bottleneck, 5.0);
//! ```

pub mod approx;
pub mod exact;
pub mod geometry;
pub mod io;
pub mod mst;
pub mod paths;
pub mod tree;
pub mod verify;

pub use approx::{
    construct_k_st, solve, solve_bisect, solve_sweep, Method, SolveError, SolveReport,
};
pub use exact::{ratio, solve_exact, solve_exact_with, ExactConfig, ExactError, ExactResult};
pub use geometry::{
    build_edge_list, distance, Edge, EdgeList, Instance, InstanceError, Point, VertexId,
};
pub use io::{parse_instance, render_svg, write_instance, ParseError};
pub use mst::{normalized_weight, terminal_mst, TerminalEdge, TerminalTree};
pub use paths::{
    all_pairs_steiner_paths, build_threshold_graph, PathTable, ThresholdGraph, Weight, WeightMatrix,
};
pub use tree::{SteinerTree, TreeViolation};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/problem.md")]
    mod problem {}
    #[doc = include_str!("../../../book/src/threshold-graphs.md")]
    mod threshold_graphs {}
    #[doc = include_str!("../../../book/src/normalized-weight.md")]
    mod normalized_weight {}
    #[doc = include_str!("../../../book/src/construction.md")]
    mod construction {}
    #[doc = include_str!("../../../book/src/exact-oracle.md")]
    mod exact_oracle {}
    #[doc = include_str!("../../../book/src/file-formats.md")]
    mod file_formats {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
