//! Cubic multigraphs stored as darts (half-edges).
//!
//! Edge `e` owns the two darts `2e` and `2e + 1`; the opposite of a dart is
//! obtained by flipping its lowest bit. Parallel edges are first-class, which
//! matters because suppression and contraction routinely manufacture them.
//! Loops are allowed in [`Multigraph`] (contracted graphs) and rejected by
//! [`CubicGraph`].

mod circuit;
mod connectivity;
mod cover;
mod edgeset;
mod surgery;

use std::ops::Deref;

use serde::Serialize;
use thiserror::Error;

pub use circuit::{Circuit, EvenSubgraph};
pub use connectivity::{bridges, cyclic_connectivity_at_least, girth, is_bridgeless, is_connected};
pub use cover::{CoverFailure, CoverReport, CycleCover, KCdc};
pub use edgeset::{EdgeSet, MAX_EDGES};
pub use surgery::{
    contract_two_factor, lift_cover, lift_even, lift_kcdc, suppress_degree_two, two_cut_join, Contraction, ReductionMap,
};

pub type VertexId = usize;
pub type EdgeId = usize;
pub type Dart = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} has degree {degree}, expected 3")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error("edge {edge} is a loop at vertex {vertex}")]
    LoopEdge { edge: EdgeId, vertex: VertexId },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("edge {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: EdgeId, m: usize },
    #[error("graph has {m} edges; at most {MAX_EDGES} are supported")]
    TooManyEdges { m: usize },
    #[error("graph has no vertices")]
    Empty,
    #[error("a component has no vertex of degree 3; nothing to suppress onto")]
    AllDegreeTwo,
    #[error("vertex {vertex} has degree {degree}; suppression needs degrees 2 or 3")]
    BadDegree { vertex: VertexId, degree: usize },
    #[error("suppression produced a loop at original vertex {vertex}")]
    LoopCreated { vertex: VertexId },
    #[error("edge set is not a 2-factor: {reason}")]
    NotTwoFactor { reason: String },
    #[error("edge set is not even: vertex {vertex} meets it {degree} times")]
    NotEven { vertex: VertexId, degree: usize },
    #[error("edges do not form a circuit: {reason}")]
    NotACircuit { reason: String },
    #[error("edge {edge} is a bridge and cannot be deleted")]
    BridgeDeleted { edge: EdgeId },
    #[error("cover does not match reduction map: {reason}")]
    MapMismatch { reason: String },
    #[error("cyclic connectivity test only supports k <= 4 (got {k})")]
    Unsupported { k: usize },
}

/// An undirected multigraph with arbitrary degrees.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Multigraph {
    n: usize,
    ends: Vec<[VertexId; 2]>,
    #[serde(skip)]
    darts_at: Vec<Vec<Dart>>,
}

impl Multigraph {
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        if edges.len() > MAX_EDGES {
            return Err(GraphError::TooManyEdges { m: edges.len() });
        }
        let mut darts_at = vec![Vec::new(); n];
        let mut ends = Vec::with_capacity(edges.len());
        for (e, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            ends.push([u, v]);
            darts_at[u].push(2 * e);
            darts_at[v].push(2 * e + 1);
        }
        Ok(Self { n, ends, darts_at })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.ends.len()
    }

    #[inline]
    pub fn ends(&self, e: EdgeId) -> [VertexId; 2] {
        self.ends[e]
    }

    pub fn edge_list(&self) -> Vec<(VertexId, VertexId)> {
        self.ends.iter().map(|&[u, v]| (u, v)).collect()
    }

    /// The endpoint of `e` that is not `v` (or `v` itself for a loop).
    #[inline]
    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let [a, b] = self.ends[e];
        if a == v {
            b
        } else {
            a
        }
    }

    #[inline]
    pub fn dart_vertex(&self, d: Dart) -> VertexId {
        self.ends[d >> 1][d & 1]
    }

    #[inline]
    pub fn opposite(d: Dart) -> Dart {
        d ^ 1
    }

    #[inline]
    pub fn dart_edge(d: Dart) -> EdgeId {
        d >> 1
    }

    #[inline]
    pub fn darts_at(&self, v: VertexId) -> &[Dart] {
        &self.darts_at[v]
    }

    /// Incident edge ids at `v`, with a loop listed twice.
    pub fn edges_at(&self, v: VertexId) -> impl Iterator<Item = EdgeId> + '_ {
        self.darts_at[v].iter().map(|&d| d >> 1)
    }

    #[inline]
    pub fn degree(&self, v: VertexId) -> usize {
        self.darts_at[v].len()
    }

    pub fn is_loop(&self, e: EdgeId) -> bool {
        let [u, v] = self.ends[e];
        u == v
    }

    pub fn loops(&self) -> Vec<EdgeId> {
        (0..self.m()).filter(|&e| self.is_loop(e)).collect()
    }

    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.ends.iter().any(|&[u, v]| !seen.insert((u.min(v), u.max(v))))
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    /// Degree of `v` inside the edge set `s` (loops count twice).
    pub fn degree_in(&self, v: VertexId, s: EdgeSet) -> usize {
        self.darts_at[v].iter().filter(|&&d| s.contains(d >> 1)).count()
    }

    pub fn check_edge(&self, e: EdgeId) -> Result<(), GraphError> {
        if e < self.m() {
            Ok(())
        } else {
            Err(GraphError::EdgeOutOfRange { edge: e, m: self.m() })
        }
    }

    /// The spanning subgraph keeping only the edges in `keep`. Returns the
    /// subgraph and, for each of its edges, the id of the edge it came from.
    pub fn spanning_subgraph(&self, keep: EdgeSet) -> (Multigraph, Vec<EdgeId>) {
        let origin: Vec<EdgeId> = keep.iter().filter(|&e| e < self.m()).collect();
        let edges: Vec<_> = origin.iter().map(|&e| (self.ends[e][0], self.ends[e][1])).collect();
        let sub = Multigraph::new(self.n, &edges).expect("subgraph of a valid graph is valid");
        (sub, origin)
    }

    /// Connected component index of each vertex, numbered in order of the
    /// smallest vertex of each component.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        let mut stack = Vec::new();
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            stack.push(s);
            while let Some(v) = stack.pop() {
                for e in self.edges_at(v) {
                    let w = self.other_end(e, v);
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        stack.push(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }
}

/// A loopless multigraph in which every vertex has degree exactly 3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct CubicGraph(Multigraph);

impl CubicGraph {
    /// Builds and validates a cubic graph on vertices `0..n`.
    pub fn new(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        Self::try_from(Multigraph::new(n, edges)?)
    }

    /// Builds a cubic graph from an edge list, inferring `n` from the largest
    /// vertex id.
    pub fn from_edges(edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().ok_or(GraphError::Empty)?;
        Self::new(n, edges)
    }

    pub fn as_multigraph(&self) -> &Multigraph {
        &self.0
    }

    pub fn into_multigraph(self) -> Multigraph {
        self.0
    }

    /// The three darts at `v`.
    #[inline]
    pub fn darts3(&self, v: VertexId) -> [Dart; 3] {
        let d = self.0.darts_at(v);
        [d[0], d[1], d[2]]
    }
}

impl TryFrom<Multigraph> for CubicGraph {
    type Error = GraphError;

    fn try_from(g: Multigraph) -> Result<Self, GraphError> {
        if g.n == 0 {
            return Err(GraphError::Empty);
        }
        if let Some(e) = (0..g.m()).find(|&e| g.is_loop(e)) {
            return Err(GraphError::LoopEdge { edge: e, vertex: g.ends[e][0] });
        }
        if let Some(v) = (0..g.n).find(|&v| g.degree(v) != 3) {
            return Err(GraphError::NotCubic { vertex: v, degree: g.degree(v) });
        }
        Ok(CubicGraph(g))
    }
}

impl Deref for CubicGraph {
    type Target = Multigraph;

    fn deref(&self) -> &Multigraph {
        &self.0
    }
}

impl AsRef<Multigraph> for CubicGraph {
    fn as_ref(&self) -> &Multigraph {
        &self.0
    }
}

impl AsRef<Multigraph> for Multigraph {
    fn as_ref(&self) -> &Multigraph {
        self
    }
}
