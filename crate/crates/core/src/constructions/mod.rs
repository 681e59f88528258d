//! Constructions that turn structural certificates into explicit short cycle
//! covers. Every result is validated against the input graph and carries the
//! bound it was built to satisfy.

mod circumference;
mod matchings;
mod oddness;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{
    suppress_degree_two, Circuit, CubicGraph, CycleCover, EdgeId, EdgeSet, EvenSubgraph, GraphError, KCdc, Multigraph,
    ReductionMap, VertexId,
};
use crate::solvers::SolverError;

pub use circumference::cover_via_circumference;
pub use matchings::{five_cdc_from_pm_cover, pm_cover_from_five_cdc, scc_cover_from_tau4};
pub use oddness::{cover_via_oddness2, Links, OddnessOptions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// CDC containing an even subgraph `C` gives a cover of length `2m - |C|`.
    CdcMinusEvenSubgraph,
    /// Longest circuit missing `k` vertices: `4m/3 + 4k`.
    Circumference,
    /// Two-component 2-factor joined by three edges: `4m/3 + 2`.
    OddnessTwoEdges,
    /// As above with three consecutive linked vertices: `4m/3 + 1`.
    OddnessTwoConsecutive,
    /// Two odd circuits joined by paths with `d` edges: `4m/3 + 2d`.
    OddnessTwoPaths,
    /// Three perfect matchings cover the edges: `4m/3`.
    PerfectMatchingIndexThree,
    /// Four perfect matchings cover the edges: `4m/3`.
    PerfectMatchingIndexFour,
    /// Balanced Petersen colouring: `7m/5`.
    PetersenBalanced,
    /// Unbalanced Petersen colouring: `ceil(7m/5) - 1`.
    PetersenUnbalanced,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    LongestCircuit {
        circuit: Circuit,
        missing_vertices: usize,
        strong_cdc_of_reduced: Vec<Circuit>,
    },
    TwoFactor {
        factor: EdgeSet,
        /// Link edges, one list per path (single edges in the edges case).
        links: Vec<Vec<EdgeId>>,
        link_edges: usize,
        consecutive: bool,
    },
    Matchings {
        matchings: Vec<EdgeSet>,
        five_cdc: Option<KCdc>,
    },
    PetersenColouring {
        /// Image in the reference Petersen graph of every edge.
        assignment: Vec<EdgeId>,
        fibers: Vec<usize>,
        petersen_cover: Vec<Circuit>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionResult {
    pub cover: CycleCover,
    pub claimed_bound: usize,
    pub theorem: Theorem,
    pub certificate: Certificate,
}

impl ConstructionResult {
    pub fn length(&self) -> usize {
        self.cover.length()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("circuit {index} of the even subgraph is not in the double cover")]
    NotContained { index: usize },
    #[error("not a cycle double cover: {reason}")]
    NotACdc { reason: String },
    #[error("cover of length {length} exceeds 4m/3 + 1 = {limit}")]
    TooLong { length: usize, limit: usize },
    #[error("invalid cover: {reason}")]
    InvalidCover { reason: String },
    #[error("circuit does not span the graph")]
    NotHamiltonian,
    #[error("shared circuits missing from a double cover: {reason}")]
    SharedMismatch { reason: String },
    #[error("no strong cycle double cover of the reduced graph{}", if *.aborted { " (search aborted)" } else { "" })]
    StrongCdcNotFound { aborted: bool },
    #[error("deleting the chords leaves a graph that is not 2-connected")]
    NotTwoConnectedReduced,
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("links are not disjoint: {0}")]
    LinksNotDisjoint(String),
    #[error("edge {edge} is in none of the matchings")]
    NotACover { edge: EdgeId },
    #[error("set {index} is not a perfect matching")]
    NotAMatching { index: usize },
    #[error("matchings {first} and {second} coincide")]
    RepeatedMatching { first: usize, second: usize },
    #[error("expected {expected} sets, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("edges covered twice do not form a perfect matching")]
    DoubledSetNotMatching,
    #[error("no class of the 5-CDC is a 2-factor")]
    NoTwoFactorClass,
    #[error("class {class} is empty")]
    EmptyClass { class: usize },
    #[error("perfect matching index is above 4")]
    TauTooLarge,
    #[error("search aborted: {0}")]
    Aborted(SolverError),
    #[error("built cover of length {length} exceeds its bound {bound}")]
    BoundExceeded { length: usize, bound: usize },
    #[error(transparent)]
    Solver(SolverError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

impl From<SolverError> for ConstructionError {
    fn from(e: SolverError) -> Self {
        match e {
            SolverError::NodeLimitExceeded { .. } => ConstructionError::Aborted(e),
            SolverError::Graph(g) => ConstructionError::Graph(g),
            other => ConstructionError::Solver(other),
        }
    }
}

fn check_cdc(g: &Multigraph, circuits: &[Circuit]) -> Result<(), ConstructionError> {
    let report = CycleCover::new(circuits.to_vec()).validate(g);
    if report.valid && report.is_cdc {
        Ok(())
    } else {
        Err(ConstructionError::NotACdc { reason: format!("{:?}", report.failures.first()) })
    }
}

/// Removes one copy of each of `remove` from `from`; returns the index in
/// `remove` of the first circuit that is missing.
fn remove_copies(from: &mut Vec<Circuit>, remove: &[Circuit]) -> Result<(), usize> {
    for (i, c) in remove.iter().enumerate() {
        let pos = from.iter().position(|x| x == c).ok_or(i)?;
        from.remove(pos);
    }
    Ok(())
}

/// A cycle double cover minus the circuits of an even subgraph it contains.
/// The result has length `2m - |c|` and weights 1 and 2 only.
pub fn cover_from_cdc(g: &Multigraph, cdc: &[Circuit], c: EvenSubgraph) -> Result<CycleCover, ConstructionError> {
    check_cdc(g, cdc)?;
    let mut rest = cdc.to_vec();
    remove_copies(&mut rest, &c.circuits(g)?).map_err(|index| ConstructionError::NotContained { index })?;
    let cover = CycleCover::new(rest);
    let report = cover.validate(g);
    if !report.valid {
        return Err(ConstructionError::InvalidCover { reason: format!("{:?}", report.failures.first()) });
    }
    debug_assert_eq!(cover.length(), 2 * g.m() - c.len());
    Ok(cover)
}

/// For a cover of length `4m/3 + k` with `k` in {0, 1}: the weight-1 edges
/// form an even subgraph on `n - k` vertices, and adding its circuits to the
/// cover gives a cycle double cover.
pub fn extract_cdc_from_cover(
    g: &CubicGraph,
    cover: &CycleCover,
) -> Result<(EvenSubgraph, Vec<Circuit>), ConstructionError> {
    let report = cover.validate(g);
    if !report.valid {
        return Err(ConstructionError::InvalidCover { reason: format!("{:?}", report.failures.first()) });
    }
    let floor = 2 * g.n();
    if cover.length() > floor + 1 {
        return Err(ConstructionError::TooLong { length: cover.length(), limit: floor + 1 });
    }
    let k = cover.length() - floor;
    let c = EvenSubgraph::new(g, cover.weight_one_edges(g.m()))?;
    if c.len() != g.n() - k || !report.is_one_two_cover {
        return Err(ConstructionError::InvalidCover { reason: "weight-1 edges do not have n - k vertices".into() });
    }
    let mut cdc = cover.circuits.clone();
    cdc.extend(c.circuits(g)?);
    cdc.sort();
    check_cdc(g, &cdc)?;
    Ok((c, cdc))
}

/// Colours a Hamiltonian circuit alternately 1 and 2 (its first edge gets
/// colour 1) and every chord 3. Colours are indexed by edge id.
pub fn hamiltonian_3ec(g: &CubicGraph, ham: &Circuit) -> Result<Vec<u8>, ConstructionError> {
    hamiltonian_3ec_parity(g, ham, false)
}

pub(crate) fn hamiltonian_3ec_parity(g: &CubicGraph, ham: &Circuit, flip: bool) -> Result<Vec<u8>, ConstructionError> {
    if ham.len() != g.n() || Circuit::from_edges(g, ham.edges()).is_err() {
        return Err(ConstructionError::NotHamiltonian);
    }
    let mut colour = vec![3u8; g.m()];
    for (i, &e) in ham.edges().iter().enumerate() {
        colour[e] = if (i % 2 == 0) != flip { 1 } else { 2 };
    }
    Ok(colour)
}

/// The three colour-pair classes `(1,2)`, `(1,3)`, `(2,3)` of a proper
/// 3-edge-colouring with colours 1..=3.
pub(crate) fn colour_classes(colour: &[u8]) -> [EdgeSet; 3] {
    let class = |a: u8, b: u8| colour.iter().enumerate().filter(|(_, &c)| c == a || c == b).map(|(e, _)| e).collect();
    [class(1, 2), class(1, 3), class(2, 3)]
}

/// Unions two cycle double covers of complementary parts of `g` that both
/// contain the circuits of `shared`, dropping one copy of each shared circuit
/// from each side. The result is checked to be a cycle double cover of `g`.
pub fn merge_cdcs(
    g: &Multigraph,
    cdc1: &[Circuit],
    cdc2: &[Circuit],
    shared: EvenSubgraph,
) -> Result<Vec<Circuit>, ConstructionError> {
    let shared = shared.circuits(g)?;
    let mut a = cdc1.to_vec();
    let mut b = cdc2.to_vec();
    remove_copies(&mut a, &shared)
        .map_err(|i| ConstructionError::SharedMismatch { reason: format!("first cover lacks shared circuit {i}") })?;
    remove_copies(&mut b, &shared)
        .map_err(|i| ConstructionError::SharedMismatch { reason: format!("second cover lacks shared circuit {i}") })?;
    a.extend(b);
    a.sort();
    check_cdc(g, &a)?;
    Ok(a)
}

/// The cubic graph homeomorphic to the subgraph formed by `keep`. Vertices
/// meeting no kept edge are dropped. The map refers to `g`'s ids.
pub(crate) fn reduce(g: &Multigraph, keep: EdgeSet) -> Result<(CubicGraph, ReductionMap), GraphError> {
    let mut new_id = vec![usize::MAX; g.n()];
    let mut old_id: Vec<VertexId> = Vec::new();
    let origin: Vec<EdgeId> = keep.iter().collect();
    for &e in &origin {
        for v in g.ends(e) {
            if new_id[v] == usize::MAX {
                new_id[v] = old_id.len();
                old_id.push(v);
            }
        }
    }
    let edges: Vec<_> = origin.iter().map(|&e| (new_id[g.ends(e)[0]], new_id[g.ends(e)[1]])).collect();
    let sub = Multigraph::new(old_id.len(), &edges)?;
    let (cubic, map) = suppress_degree_two(&sub)?;
    let mut map = map.relabel_edges(&origin, g.m());
    map.vertex_origin.iter_mut().for_each(|v| *v = old_id[*v]);
    map.suppressed_vertices.iter_mut().for_each(|v| *v = old_id[*v]);
    Ok((cubic, map))
}

/// Lifts circuits of a reduced graph back to `g`.
pub(crate) fn lift_all(g: &Multigraph, map: &ReductionMap, circuits: &[Circuit]) -> Result<Vec<Circuit>, GraphError> {
    circuits
        .iter()
        .map(|c| {
            let set: EdgeSet = c.edges().iter().flat_map(|&e| map.edge_path[e].iter().copied()).collect();
            Circuit::from_edge_set(g, set)
        })
        .collect()
}

/// The reduced edges lying entirely inside `set`.
pub(crate) fn image_of(map: &ReductionMap, set: EdgeSet) -> EdgeSet {
    (0..map.edge_path.len()).filter(|&e| map.edge_path[e].iter().all(|&x| set.contains(x))).collect()
}

/// Checks the length bound and packages a result.
pub(crate) fn finish(
    g: &Multigraph,
    cover: CycleCover,
    claimed_bound: usize,
    theorem: Theorem,
    certificate: Certificate,
) -> Result<ConstructionResult, ConstructionError> {
    let report = cover.validate(g);
    if !report.valid {
        return Err(ConstructionError::InvalidCover { reason: format!("{:?}", report.failures.first()) });
    }
    if cover.length() > claimed_bound {
        return Err(ConstructionError::BoundExceeded { length: cover.length(), bound: claimed_bound });
    }
    Ok(ConstructionResult { cover, claimed_bound, theorem, certificate })
}

/// `4m/3` for a cubic graph, which is `2n`.
pub(crate) fn four_thirds(g: &Multigraph) -> usize {
    2 * g.n()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::petersen;
    use crate::graph::tests::{k4, prism};
    use crate::solvers::{circumference, find_cdc, shortest_cycle_cover, CdcConstraints, CdcSolution, SccOptions};

    fn k4_three_cdc() -> (Vec<Circuit>, [EdgeSet; 3]) {
        let g = k4();
        // K4 edge ids: 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3); perfect
        // matchings {0,5}, {1,4}, {2,3} coloured 1, 2, 3
        let colour = [1, 2, 3, 3, 2, 1];
        let classes = colour_classes(&colour);
        let circuits = classes.iter().flat_map(|&c| EvenSubgraph::new(&g, c).unwrap().circuits(&g).unwrap()).collect();
        (circuits, classes)
    }

    #[test]
    fn k4_cover_from_a_class() {
        let g = k4();
        let (cdc, classes) = k4_three_cdc();
        let cover = cover_from_cdc(&g, &cdc, EvenSubgraph::new(&g, classes[0]).unwrap()).unwrap();
        assert_eq!(cover.length(), 8);
        assert!(cover.validate(&g).is_one_two_cover);
    }

    #[test]
    fn petersen_cover_from_strong_cdc() {
        let g = petersen();
        let (_, c9) = circumference(&g).unwrap();
        let CdcSolution::Circuits(cdc) =
            find_cdc(&g, &CdcConstraints { must_contain: vec![c9.clone()], ..Default::default() }).unwrap()
        else {
            panic!("strong CDC exists")
        };
        let c = EvenSubgraph::new(&g, c9.edge_set()).unwrap();
        assert_eq!(cover_from_cdc(&g, &cdc, c).unwrap().length(), 21);
    }

    #[test]
    fn absent_circuit_is_rejected() {
        let g = k4();
        let (mut cdc, classes) = k4_three_cdc();
        let c = EvenSubgraph::new(&g, classes[0]).unwrap();
        let first = c.circuits(&g).unwrap()[0].clone();
        let pos = cdc.iter().position(|x| *x == first).unwrap();
        // swap that circuit for an equal-weight pair elsewhere: still a CDC?
        // Simpler: ask for a circuit the CDC does not have.
        let tri = Circuit::from_edges(&g, &[0, 3, 1]).unwrap();
        assert!(!cdc.contains(&tri));
        let e = cover_from_cdc(&g, &cdc, EvenSubgraph::new(&g, tri.edge_set()).unwrap()).unwrap_err();
        assert_eq!(e, ConstructionError::NotContained { index: 0 });
        cdc.remove(pos);
        assert!(matches!(cover_from_cdc(&g, &cdc, c), Err(ConstructionError::NotACdc { .. })));
    }

    #[test]
    fn extraction_on_optimal_covers() {
        for g in [k4(), prism(), petersen()] {
            let r = shortest_cycle_cover(&g, SccOptions::default()).unwrap();
            let (c, cdc) = extract_cdc_from_cover(&g, &r.cover).unwrap();
            assert_eq!(c.len(), g.n() - (r.length - 2 * g.n()));
            assert_eq!(cdc.iter().map(Circuit::len).sum::<usize>(), 2 * g.m());
        }
    }

    #[test]
    fn long_cover_is_too_long() {
        let g = k4();
        // all four triangles: length 12 = 4m/3 + 4
        let tris = [[0, 3, 1], [0, 4, 2], [1, 5, 2], [3, 5, 4]];
        let cover = CycleCover::new(tris.iter().map(|t| Circuit::from_edges(&g, t).unwrap()).collect());
        assert_eq!(
            extract_cdc_from_cover(&g, &cover).unwrap_err(),
            ConstructionError::TooLong { length: 12, limit: 9 }
        );
    }

    #[test]
    fn hamiltonian_colourings() {
        let g = k4();
        let ham = Circuit::from_edges(&g, &[0, 4, 5, 1]).unwrap();
        let col = hamiltonian_3ec(&g, &ham).unwrap();
        assert_eq!((col[2], col[3]), (3, 3));
        let p = prism();
        let (_, h) = circumference(&p).unwrap();
        let col = hamiltonian_3ec(&p, &h).unwrap();
        for v in 0..p.n() {
            let mut cs: Vec<u8> = p.edges_at(v).map(|e| col[e]).collect();
            cs.sort_unstable();
            assert_eq!(cs, vec![1, 2, 3]);
        }
        let tri = Circuit::from_edges(&g, &[0, 3, 1]).unwrap();
        assert_eq!(hamiltonian_3ec(&g, &tri).unwrap_err(), ConstructionError::NotHamiltonian);
    }

    #[test]
    fn merge_needs_the_shared_circuit() {
        let g = k4();
        let (cdc, classes) = k4_three_cdc();
        let shared = EvenSubgraph::new(&g, classes[0]).unwrap();
        let c = shared.circuits(&g).unwrap();
        // split the CDC: one side is the shared circuit twice
        let mut other = cdc.clone();
        remove_copies(&mut other, &c).unwrap();
        let side = vec![c[0].clone(), c[0].clone()];
        let merged = merge_cdcs(&g, &cdc, &side, shared).unwrap();
        assert_eq!(merged, {
            let mut m = cdc.clone();
            m.sort();
            m
        });
        let e = merge_cdcs(&g, &cdc, &other, shared).unwrap_err();
        assert!(matches!(e, ConstructionError::SharedMismatch { .. }));
    }
}
