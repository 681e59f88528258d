//! Petersen colourings: maps from the edges of a cubic graph to the edges of
//! the reference Petersen graph ([`crate::families::petersen`]) sending the
//! three edges at every vertex to the three edges at some vertex of `P`.

mod format;
mod pullback;

use std::sync::OnceLock;

use serde::Serialize;
use thiserror::Error;

use crate::constructions::ConstructionError;
use crate::families::petersen;
use crate::graph::{CubicGraph, EdgeId, Multigraph, VertexId};
use crate::solvers::{Budget, SolverError};

pub use format::{parse_colouring, write_colouring};
pub use pullback::{best_pullback_cover, optimal_petersen_covers, pullback_cover};

pub const P_EDGES: usize = 15;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PetersenError {
    #[error("assignment has {got} entries for {expected} edges")]
    PartialAssignment { expected: usize, got: usize },
    #[error("edge {edge} is mapped to {image}, which is not an edge of P")]
    BadImage { edge: EdgeId, image: usize },
    #[error("colouring violates the vertex condition at {vertex}")]
    Invalid { vertex: VertexId },
    #[error("search aborted after {limit} nodes")]
    Aborted { limit: u64 },
    #[error("the cover of P is not valid")]
    CoverNotValid,
    #[error("preimage of circuit {index} is not an even subgraph")]
    PreimageNotEven { index: usize },
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error(transparent)]
    Construction(#[from] ConstructionError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PetersenColouring {
    /// P-edge of each edge of G.
    pub assignment: Vec<EdgeId>,
}

impl PetersenColouring {
    pub fn new(assignment: Vec<EdgeId>) -> Self {
        PetersenColouring { assignment }
    }

    /// Number of edges of G mapped onto each edge of P.
    pub fn fibers(&self) -> [usize; P_EDGES] {
        let mut f = [0; P_EDGES];
        for &p in &self.assignment {
            f[p] += 1;
        }
        f
    }

    pub fn is_balanced(&self) -> bool {
        let f = self.fibers();
        f.iter().all(|&x| x == f[0])
    }
}

pub(crate) fn reference() -> &'static CubicGraph {
    static P: OnceLock<CubicGraph> = OnceLock::new();
    P.get_or_init(petersen)
}

/// The P-vertex shared by two distinct P-edges, if any.
fn common_vertex(a: EdgeId, b: EdgeId) -> Option<VertexId> {
    let p = reference();
    let [x, y] = p.ends(a);
    let other = p.ends(b);
    if a == b {
        None
    } else if other.contains(&x) {
        Some(x)
    } else if other.contains(&y) {
        Some(y)
    } else {
        None
    }
}

/// Whether the images at a vertex (with `None` for unassigned) can still be
/// completed to a star of P.
fn star_consistent(images: [Option<EdgeId>; 3]) -> bool {
    let set: Vec<EdgeId> = images.iter().flatten().copied().collect();
    match set.len() {
        0 | 1 => true,
        2 => common_vertex(set[0], set[1]).is_some(),
        _ => match common_vertex(set[0], set[1]) {
            Some(c) => set[2] != set[0] && set[2] != set[1] && reference().ends(set[2]).contains(&c),
            None => false,
        },
    }
}

fn check_shape(g: &Multigraph, c: &PetersenColouring) -> Result<(), PetersenError> {
    if c.assignment.len() != g.m() {
        return Err(PetersenError::PartialAssignment { expected: g.m(), got: c.assignment.len() });
    }
    if let Some((edge, &image)) = c.assignment.iter().enumerate().find(|(_, &p)| p >= P_EDGES) {
        return Err(PetersenError::BadImage { edge, image });
    }
    Ok(())
}

/// `Ok(None)` when valid, otherwise the first vertex whose three edges do not
/// go to the three edges at one vertex of P.
pub fn verify_petersen_colouring(g: &CubicGraph, c: &PetersenColouring) -> Result<Option<VertexId>, PetersenError> {
    check_shape(g, c)?;
    Ok((0..g.n()).find(|&v| {
        let [a, b, d] = g.darts3(v).map(|x| Some(c.assignment[Multigraph::dart_edge(x)]));
        !star_consistent([a, b, d])
    }))
}

pub enum Search {
    Found(PetersenColouring),
    NotFound,
}

/// Backtracking over edge images in BFS order with forcing: once two edges
/// at a vertex are placed, the third is determined. The first edge of each
/// component is fixed to P-edge 0, which P's edge-transitivity allows.
pub fn find_petersen_colouring(g: &CubicGraph, node_limit: u64) -> Result<Search, PetersenError> {
    let mut s = Finder { g, image: vec![None; g.m()], trail: Vec::new(), budget: Budget::new(node_limit) };
    let order = bfs_edges(g);
    match s.run(&order, 0) {
        Ok(true) => {
            let assignment = s.image.iter().map(|x| x.expect("complete")).collect();
            Ok(Search::Found(PetersenColouring::new(assignment)))
        }
        Ok(false) => Ok(Search::NotFound),
        Err(SolverError::NodeLimitExceeded { limit }) => Err(PetersenError::Aborted { limit }),
        Err(e) => unreachable!("{e}"),
    }
}

fn bfs_edges(g: &Multigraph) -> Vec<EdgeId> {
    let mut seen_v = vec![false; g.n()];
    let mut seen_e = vec![false; g.m()];
    let mut order = Vec::with_capacity(g.m());
    for root in 0..g.n() {
        if seen_v[root] {
            continue;
        }
        seen_v[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for e in g.edges_at(v) {
                if !seen_e[e] {
                    seen_e[e] = true;
                    order.push(e);
                }
                let w = g.other_end(e, v);
                if !seen_v[w] {
                    seen_v[w] = true;
                    queue.push_back(w);
                }
            }
        }
    }
    order
}

struct Finder<'a> {
    g: &'a CubicGraph,
    image: Vec<Option<EdgeId>>,
    trail: Vec<EdgeId>,
    budget: Budget,
}

impl Finder<'_> {
    fn images_at(&self, v: VertexId) -> [Option<EdgeId>; 3] {
        self.g.darts3(v).map(|d| self.image[Multigraph::dart_edge(d)])
    }

    /// Places `e -> p` and everything it forces; false on contradiction.
    fn place(&mut self, e: EdgeId, p: EdgeId) -> bool {
        let mut stack = vec![(e, p)];
        while let Some((e, p)) = stack.pop() {
            match self.image[e] {
                Some(q) if q == p => continue,
                Some(_) => return false,
                None => {}
            }
            self.image[e] = Some(p);
            self.trail.push(e);
            for v in self.g.ends(e) {
                let imgs = self.images_at(v);
                if !star_consistent(imgs) {
                    return false;
                }
                let placed: Vec<EdgeId> = imgs.iter().flatten().copied().collect();
                if placed.len() == 2 {
                    let c = common_vertex(placed[0], placed[1]).expect("consistent");
                    let third = reference().edges_at(c).find(|x| !placed.contains(x)).expect("cubic");
                    let free =
                        self.g.darts3(v).map(Multigraph::dart_edge).into_iter().find(|&x| self.image[x].is_none());
                    stack.push((free.expect("one edge left"), third));
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        for e in self.trail.drain(mark..) {
            self.image[e] = None;
        }
    }

    fn run(&mut self, order: &[EdgeId], mut i: usize) -> Result<bool, SolverError> {
        while i < order.len() && self.image[order[i]].is_some() {
            i += 1;
        }
        let Some(&e) = order.get(i) else { return Ok(true) };
        self.budget.tick()?;
        let starts_component = self.g.ends(e).iter().all(|&v| self.images_at(v).iter().all(Option::is_none));
        let candidates: Vec<EdgeId> = if starts_component { vec![0] } else { (0..P_EDGES).collect() };
        for p in candidates {
            let mark = self.trail.len();
            if self.place(e, p) && self.run(order, i + 1)? {
                return Ok(true);
            }
            self.undo(mark);
        }
        Ok(false)
    }
}
