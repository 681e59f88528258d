use super::{
    colour_classes, cover_from_cdc, finish, four_thirds, hamiltonian_3ec_parity, image_of, lift_all, merge_cdcs,
    reduce, Certificate, ConstructionError, ConstructionResult, Theorem,
};
use crate::graph::{is_bridgeless, Circuit, CubicGraph, EdgeSet, EvenSubgraph, GraphError};
use crate::solvers::{find_cdc, CdcConstraints, CdcSolution, SolverError};

/// Cover of length at most `4m/3 + 4k` from a circuit `c` missing `k`
/// vertices.
///
/// The chords of `c` are deleted and the rest suppressed to `G'`; a strong
/// CDC of `G'` through the image of `c` is lifted. The chords together with
/// `c` suppress to a Hamiltonian `G''` whose colour-pair classes give a second
/// CDC. Both contain `c`, and the merged CDC minus the lifted `(1,3)` class is
/// the cover.
pub fn cover_via_circumference(
    g: &CubicGraph,
    c: &Circuit,
    node_limit: u64,
) -> Result<ConstructionResult, ConstructionError> {
    if !is_bridgeless(g) {
        return Err(ConstructionError::HypothesisViolated("graph has a bridge".into()));
    }
    let c = Circuit::from_edges(g, c.edges())?;
    let k = g.n() - c.len();
    let bound = four_thirds(g) + 4 * k;
    let on_c: Vec<bool> = {
        let mut on = vec![false; g.n()];
        c.vertices().iter().for_each(|&v| on[v] = true);
        on
    };
    let chords: EdgeSet = (0..g.m()).filter(|&e| !c.contains(e) && g.ends(e).iter().all(|&v| on_c[v])).collect();

    if k == 0 {
        let (colour, _) = best_colouring(g, &c)?;
        let classes = colour_classes(&colour);
        let cdc = class_circuits(g, &classes)?;
        let cover = cover_from_cdc(g, &cdc, EvenSubgraph::new(g, classes[1])?)?;
        let cert = Certificate::LongestCircuit { circuit: c, missing_vertices: 0, strong_cdc_of_reduced: Vec::new() };
        return finish(g, cover, bound, Theorem::Circumference, cert);
    }

    let (reduced, map) = reduce(g, g.all_edges() - chords).map_err(|e| match e {
        GraphError::LoopCreated { .. } => ConstructionError::NotTwoConnectedReduced,
        other => other.into(),
    })?;
    if !is_bridgeless(&reduced) {
        return Err(ConstructionError::NotTwoConnectedReduced);
    }
    let c_image = Circuit::from_edge_set(&reduced, image_of(&map, c.edge_set()))?;
    let constraints = CdcConstraints { must_contain: vec![c_image], node_limit, ..Default::default() };
    let strong = match find_cdc(&reduced, &constraints) {
        Ok(CdcSolution::Circuits(cs)) => cs,
        Ok(_) => return Err(ConstructionError::StrongCdcNotFound { aborted: false }),
        Err(SolverError::NodeLimitExceeded { .. }) => {
            return Err(ConstructionError::StrongCdcNotFound { aborted: true })
        }
        Err(e) => return Err(e.into()),
    };
    let first = lift_all(g, &map, &strong)?;

    let cover = if chords.is_empty() {
        // the second CDC would be c twice; merging gives the first back
        cover_from_cdc(g, &first, EvenSubgraph::new(g, c.edge_set())?)?
    } else {
        let (ham_graph, ham_map) = reduce(g, c.edge_set() | chords)?;
        let ham = Circuit::from_edge_set(&ham_graph, image_of(&ham_map, c.edge_set()))?;
        let (colour, _) = best_colouring_lifted(&ham_graph, &ham, &ham_map)?;
        let classes = colour_classes(&colour);
        let second = lift_all(g, &ham_map, &class_circuits(&ham_graph, &classes)?)?;
        let merged = merge_cdcs(g, &first, &second, EvenSubgraph::new(g, c.edge_set())?)?;
        let lifted13: EdgeSet = classes[1].iter().flat_map(|e| ham_map.edge_path[e].iter().copied()).collect();
        cover_from_cdc(g, &merged, EvenSubgraph::new(g, lifted13)?)?
    };
    let cert = Certificate::LongestCircuit { circuit: c, missing_vertices: k, strong_cdc_of_reduced: strong };
    finish(g, cover, bound, Theorem::Circumference, cert)
}

fn class_circuits(g: &crate::graph::Multigraph, classes: &[EdgeSet; 3]) -> Result<Vec<Circuit>, GraphError> {
    let mut out = Vec::new();
    for &class in classes {
        out.extend(EvenSubgraph::new(g, class)?.circuits(g)?);
    }
    Ok(out)
}

fn best_colouring(g: &CubicGraph, ham: &Circuit) -> Result<(Vec<u8>, usize), ConstructionError> {
    best_colouring_lifted(g, ham, &crate::graph::ReductionMap::identity(g))
}

/// Of the two alternating colourings, the one whose `(1,3)` class is longest
/// once lifted through `map`.
fn best_colouring_lifted(
    g: &CubicGraph,
    ham: &Circuit,
    map: &crate::graph::ReductionMap,
) -> Result<(Vec<u8>, usize), ConstructionError> {
    let mut best: Option<(Vec<u8>, usize)> = None;
    for flip in [false, true] {
        let colour = hamiltonian_3ec_parity(g, ham, flip)?;
        let size = (0..g.m()).filter(|&e| colour[e] != 2).map(|e| map.edge_path[e].len()).sum();
        if best.as_ref().is_none_or(|(_, s)| size > *s) {
            best = Some((colour, size));
        }
    }
    Ok(best.expect("two parities tried"))
}
