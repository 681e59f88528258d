use std::sync::OnceLock;

use super::{check_shape, reference, verify_petersen_colouring, PetersenColouring, PetersenError};
use crate::constructions::{cover_from_cdc, finish, Certificate, ConstructionResult, Theorem};
use crate::graph::{Circuit, CubicGraph, CycleCover, EdgeSet, EvenSubgraph};
use crate::solvers::{enumerate_circuits, find_cdc, CdcConstraints, CdcSolution};

/// Pulls every circuit of a cover of P back along the colouring. Each
/// preimage is an even subgraph of G and is split into its circuits.
pub fn pullback_cover(
    g: &CubicGraph,
    c: &PetersenColouring,
    cover_of_p: &CycleCover,
) -> Result<CycleCover, PetersenError> {
    check_shape(g, c)?;
    if let Some(vertex) = verify_petersen_colouring(g, c)? {
        return Err(PetersenError::Invalid { vertex });
    }
    if !cover_of_p.validate(reference()).valid {
        return Err(PetersenError::CoverNotValid);
    }
    let mut circuits = Vec::new();
    for (index, pc) in cover_of_p.circuits.iter().enumerate() {
        let pre: EdgeSet = (0..g.m()).filter(|&e| pc.contains(c.assignment[e])).collect();
        let even = EvenSubgraph::new(g, pre).map_err(|_| PetersenError::PreimageNotEven { index })?;
        circuits.extend(even.circuits(g).map_err(|_| PetersenError::PreimageNotEven { index })?);
    }
    let cover = CycleCover::new(circuits);
    let fibers = c.fibers();
    let weights = cover_of_p.edge_weights(super::P_EDGES);
    debug_assert_eq!(cover.length(), (0..super::P_EDGES).map(|p| weights[p] as usize * fibers[p]).sum::<usize>());
    Ok(cover)
}

/// The optimal covers of P, one per 9-circuit. A cover of length 21 has
/// weight 1 exactly on a 9-circuit and weight 2 elsewhere, so the pulled-back
/// length depends only on that circuit.
pub fn optimal_petersen_covers() -> &'static [(Circuit, CycleCover)] {
    static COVERS: OnceLock<Vec<(Circuit, CycleCover)>> = OnceLock::new();
    COVERS.get_or_init(|| {
        let p = reference();
        enumerate_circuits(p)
            .into_iter()
            .filter(|c| c.len() == 9)
            .map(|c| {
                let constraints = CdcConstraints { must_contain: vec![c.clone()], ..Default::default() };
                let Ok(CdcSolution::Circuits(cdc)) = find_cdc(p, &constraints) else {
                    panic!("every 9-circuit of P lies in a cycle double cover")
                };
                let cover = cover_from_cdc(p, &cdc, EvenSubgraph::new(p, c.edge_set()).expect("circuit"))
                    .expect("CDC contains the circuit");
                (c, cover)
            })
            .collect()
    })
}

/// Pullback of the optimal P-cover whose weight-1 circuit carries the most
/// edges of G. Claimed bound `7m/5` when balanced, otherwise
/// `ceil(7m/5) - 1`.
pub fn best_pullback_cover(g: &CubicGraph, c: &PetersenColouring) -> Result<ConstructionResult, PetersenError> {
    check_shape(g, c)?;
    if let Some(vertex) = verify_petersen_colouring(g, c)? {
        return Err(PetersenError::Invalid { vertex });
    }
    let fibers = c.fibers();
    let (circuit, p_cover) = optimal_petersen_covers()
        .iter()
        .max_by_key(|(circ, _)| {
            (circ.edges().iter().map(|&e| fibers[e]).sum::<usize>(), std::cmp::Reverse(circ.clone()))
        })
        .expect("twenty 9-circuits");
    let cover = pullback_cover(g, c, p_cover)?;
    debug_assert_eq!(cover.length(), 2 * g.m() - circuit.edges().iter().map(|&e| fibers[e]).sum::<usize>());
    let m = g.m();
    let (bound, theorem) = if c.is_balanced() {
        (7 * m / 5, Theorem::PetersenBalanced)
    } else {
        ((7 * m).div_ceil(5) - 1, Theorem::PetersenUnbalanced)
    };
    let cert = Certificate::PetersenColouring {
        assignment: c.assignment.clone(),
        fibers: fibers.to_vec(),
        petersen_cover: p_cover.circuits.clone(),
    };
    Ok(finish(g, cover, bound, theorem, cert)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{flower, petersen};
    use crate::graph::tests::{k4, prism};
    use crate::petersen::{find_petersen_colouring, Search};
    use crate::solvers::{edge_colouring_3, shortest_cycle_cover, SccOptions, DEFAULT_NODE_LIMIT};

    #[test]
    fn twenty_optimal_covers() {
        let covers = optimal_petersen_covers();
        assert_eq!(covers.len(), 20);
        for (c, cover) in covers {
            assert_eq!(cover.length(), 21);
            assert_eq!(cover.weight_one_edges(15), c.edge_set());
        }
    }

    #[test]
    fn identity_pullback() {
        let p = petersen();
        let id = PetersenColouring::new((0..15).collect());
        let r = best_pullback_cover(&p, &id).unwrap();
        assert_eq!((r.length(), r.claimed_bound, r.theorem), (21, 21, Theorem::PetersenBalanced));
    }

    #[test]
    fn star_pullback_on_colourable_graphs() {
        for g in [k4(), prism()] {
            let colour = edge_colouring_3(&g).unwrap();
            let c = PetersenColouring::new(colour.iter().map(|&x| [0, 4, 5][x as usize]).collect());
            let r = best_pullback_cover(&g, &c).unwrap();
            assert_eq!(r.length(), 4 * g.m() / 3);
            assert_eq!(r.theorem, Theorem::PetersenUnbalanced);
        }
    }

    #[test]
    fn flower_pullback_is_bounded_below_by_scc() {
        let g = flower(5).unwrap();
        let Search::Found(c) = find_petersen_colouring(&g, DEFAULT_NODE_LIMIT).unwrap() else { panic!() };
        let r = best_pullback_cover(&g, &c).unwrap();
        assert_eq!(r.claimed_bound, 41);
        let exact = shortest_cycle_cover(&g, SccOptions::default()).unwrap().length;
        assert!(exact <= r.length() && r.length() <= 41);
    }

    #[test]
    fn invalid_cover_of_p_rejected() {
        let p = petersen();
        let id = PetersenColouring::new((0..15).collect());
        let (_, cover) = &optimal_petersen_covers()[0];
        let short = CycleCover::new(vec![cover.circuits[0].clone()]);
        assert_eq!(pullback_cover(&p, &id, &short).unwrap_err(), PetersenError::CoverNotValid);
    }
}
