//! Exact cycle-cover machinery for cubic bridgeless graphs.
//!
//! The crate is organised in layers:
//!
//! - [`graph`]: dart-based cubic multigraphs, circuits, even subgraphs,
//!   covers and the surgery (suppression, contraction, 2-cut joins, lifting)
//!   used by the constructions.
//! - [`families`]: generators for the Petersen graph, flower snarks,
//!   Goldberg snarks and permutation graphs, plus graph6 / adjacency I/O.
//! - [`solvers`]: exhaustive solvers for shortest cycle covers, the perfect
//!   matching index, oddness, circumference, constrained cycle double covers,
//!   3-edge-colourings, disjoint paths and optimal edge-weight spectra.
//! - [`constructions`]: certificate-producing short covers built from long
//!   circuits, oddness-2 two-factors, perfect matching covers and 5-CDCs.
//! - [`petersen`]: Petersen colourings, their verification and search, and
//!   pullback covers.

pub mod constructions;
pub mod families;
pub mod graph;
pub mod petersen;
pub mod solvers;

pub use graph::{
    Circuit, CoverReport, CubicGraph, CycleCover, EdgeId, EdgeSet, EvenSubgraph, GraphError, KCdc, Multigraph,
    ReductionMap, VertexId,
};
