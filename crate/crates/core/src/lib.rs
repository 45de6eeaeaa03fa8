//! Minimum eccentricity shortest paths in unweighted undirected graphs.
//!
//! A shortest path `P` has eccentricity `max_v d(v, P)`; the problem asks for
//! a shortest path minimizing it. This crate provides
//!
//! - an exact algorithm for distance-hereditary graphs ([`dh`]),
//! - an exact window dynamic program for graphs with projection gap at most
//!   `γ` ([`gap`]), with `γ = 0` on chordal graphs,
//! - an additive approximation through mutually furthest vertices ([`approx`]),
//! - an exhaustive oracle for small graphs ([`oracle`]),
//!
//! plus the class machinery that chooses between them ([`structure`],
//! [`solver`]).

pub mod approx;
pub mod dh;
pub mod error;
pub mod gap;
pub mod graph;
pub mod io;
pub mod metric;
pub mod oracle;
pub mod solver;
pub mod structure;

pub use approx::{approx_mesp, mutually_furthest_pair, FurthestPairTrace};
pub use dh::{dh_best_st_path, dh_solve, distance_hereditary_violation, is_distance_hereditary};
pub use error::{BudgetScope, Error, Result};
pub use gap::{solve_from_source, solve_global};
pub use graph::Graph;
pub use io::{parse_edge_list, write_edge_list, LabeledGraph};
pub use metric::{
    all_pairs, bfs_distances, double_sweep, eccentricity_of_set, interval, metric_report,
    projection, slice, slices, DistanceMatrix, MetricReport, VertexPath,
};
pub use oracle::{
    enumerate_shortest_paths, exact_mesp, exact_pair_mesp, exact_projection_gap, exact_source_mesp,
    EnumerationBudget, OracleResult,
};
pub use solver::{
    solve, Algorithm, Certificate, GammaChoice, Guarantee, Scope, SolveResult, SolverConfig,
    Strategy,
};
pub use structure::{ClassHint, GammaEstimate, GammaMethod};
