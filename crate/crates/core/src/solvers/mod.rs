//! Exact solvers: circuit and matching enumeration, perfect-matching index,
//! oddness, circumference, 3-edge-colouring, constrained cycle double covers,
//! shortest cycle covers and edge weight spectra.
//!
//! Everything here is exhaustive search. Results are deterministic: witnesses
//! are the first found in a fixed search order, and enumerations are returned
//! sorted.

mod cdc;
mod circuits;
mod circumference;
mod colouring;
mod demand;
mod matchings;
mod paths;
mod scc;

use thiserror::Error;

use crate::graph::{EdgeId, GraphError};

pub use cdc::{find_cdc, CdcConstraints, CdcSolution};
pub use circuits::{enumerate_circuits, enumerate_circuits_seeded};
pub use circumference::circumference;
pub use colouring::edge_colouring_3;
pub use demand::{demand_cover, DemandOutcome};
pub use matchings::{
    enumerate_perfect_matchings, enumerate_perfect_matchings_seeded, oddness, perfect_matching_index, Tau, TauResult,
};
pub use paths::{three_disjoint_paths, DisjointPaths};
pub use scc::{edge_weight_spectrum, shortest_cycle_cover, SccOptions, SccResult, WeightSpectrum};

/// Default cap on search nodes for the branch-and-bound solvers.
pub const DEFAULT_NODE_LIMIT: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("edge {edge} is a bridge; no cycle cover exists")]
    Bridged { edge: EdgeId },
    #[error("graph has no perfect matching, hence no 2-factor")]
    NoTwoFactor,
    #[error("search aborted after {limit} nodes")]
    NodeLimitExceeded { limit: u64 },
    #[error("source and sink coincide")]
    SameEndpoints,
    #[error("fewer than three internally disjoint paths between {s} and {t}")]
    NoThreePaths { s: usize, t: usize },
    #[error("unsupported weight cap {cap}; use 2 or 3")]
    UnsupportedCap { cap: u32 },
    #[error("bad constraint: {0}")]
    BadConstraint(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Counts search nodes against an optional limit.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Budget {
    pub(crate) used: u64,
    pub(crate) limit: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget { used: 0, limit }
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }

    pub(crate) fn tick(&mut self) -> Result<(), SolverError> {
        self.used += 1;
        if self.used > self.limit {
            Err(SolverError::NodeLimitExceeded { limit: self.limit })
        } else {
            Ok(())
        }
    }
}

fn check_bridgeless(g: &crate::graph::Multigraph) -> Result<(), SolverError> {
    match crate::graph::bridges(g).first() {
        Some(&edge) => Err(SolverError::Bridged { edge }),
        None => Ok(()),
    }
}
