use super::{
    colour_classes, cover_from_cdc, finish, four_thirds, Certificate, ConstructionError, ConstructionResult, Theorem,
};
use crate::graph::{Circuit, CubicGraph, EdgeSet, EvenSubgraph, KCdc, Multigraph};
use crate::solvers::{perfect_matching_index, Tau};

fn is_perfect_matching(g: &Multigraph, set: EdgeSet) -> bool {
    (0..g.n()).all(|v| g.degree_in(v, set) == 1)
}

/// Turns four distinct perfect matchings covering every edge into a 5-CDC
/// whose last class is a 2-factor. With `M` the edges in two of the
/// matchings, the classes are `M ^ M_i` for each `i` and `E - M`.
pub fn five_cdc_from_pm_cover(g: &CubicGraph, matchings: &[EdgeSet]) -> Result<KCdc, ConstructionError> {
    if matchings.len() != 4 {
        return Err(ConstructionError::WrongCount { expected: 4, got: matchings.len() });
    }
    for (index, &m) in matchings.iter().enumerate() {
        if !m.is_subset(g.all_edges()) || !is_perfect_matching(g, m) {
            return Err(ConstructionError::NotAMatching { index });
        }
    }
    for i in 0..4 {
        for j in i + 1..4 {
            if matchings[i] == matchings[j] {
                return Err(ConstructionError::RepeatedMatching { first: i, second: j });
            }
        }
    }
    let mut doubled = EdgeSet::EMPTY;
    for e in 0..g.m() {
        match matchings.iter().filter(|m| m.contains(e)).count() {
            0 => return Err(ConstructionError::NotACover { edge: e }),
            2 => doubled.insert(e),
            _ => {}
        }
    }
    if !is_perfect_matching(g, doubled) {
        return Err(ConstructionError::DoubledSetNotMatching);
    }
    let mut classes: Vec<EdgeSet> = matchings.iter().map(|&m| m ^ doubled).collect();
    classes.push(g.all_edges() - doubled);
    let cdc = KCdc::new(classes);
    let report = cdc.validate(g);
    if !report.is_cdc {
        return Err(ConstructionError::NotACdc { reason: format!("{:?}", report.failures.first()) });
    }
    Ok(cdc)
}

/// Inverse direction: from a 5-CDC with a 2-factor class `F`, the four sets
/// `(F & C_i) | (E - F - C_i)` over the other classes are perfect matchings
/// covering every edge. `factor` picks the class; otherwise the first
/// 2-factor class is used.
pub fn pm_cover_from_five_cdc(
    g: &CubicGraph,
    cdc: &KCdc,
    factor: Option<usize>,
) -> Result<Vec<EdgeSet>, ConstructionError> {
    if cdc.k() != 5 {
        return Err(ConstructionError::WrongCount { expected: 5, got: cdc.k() });
    }
    let report = cdc.validate(g);
    if !report.is_cdc {
        return Err(ConstructionError::NotACdc { reason: format!("{:?}", report.failures.first()) });
    }
    if let Some(class) = cdc.classes.iter().position(|c| c.is_empty()) {
        return Err(ConstructionError::EmptyClass { class });
    }
    let is_factor = |i: usize| EvenSubgraph::new(g, cdc.classes[i]).is_ok_and(|s| s.is_two_factor(g));
    let f = match factor {
        Some(i) if i < 5 && is_factor(i) => i,
        Some(_) => return Err(ConstructionError::NoTwoFactorClass),
        None => (0..5).find(|&i| is_factor(i)).ok_or(ConstructionError::NoTwoFactorClass)?,
    };
    let fset = cdc.classes[f];
    let rest = g.all_edges() - fset;
    let out: Vec<EdgeSet> =
        (0..5).filter(|&i| i != f).map(|i| (fset & cdc.classes[i]) | (rest - cdc.classes[i])).collect();
    debug_assert!(out.iter().all(|&m| is_perfect_matching(g, m)));
    debug_assert_eq!(out.iter().fold(EdgeSet::EMPTY, |a, &b| a | b), g.all_edges());
    Ok(out)
}

/// Cover of length `4m/3` for graphs with perfect matching index at most 4.
/// Index 3 uses the colour-pair classes of the 3-edge-colouring; index 4 goes
/// through the 5-CDC and removes its 2-factor class.
pub fn scc_cover_from_tau4(g: &CubicGraph) -> Result<ConstructionResult, ConstructionError> {
    let tau = perfect_matching_index(g, 4);
    let bound = four_thirds(g);
    match tau.tau {
        Tau::Exact(k) if k <= 3 => {
            // three perfect matchings covering a cubic graph are disjoint
            let mut colour = vec![0u8; g.m()];
            for (i, m) in tau.matchings.iter().enumerate() {
                m.iter().for_each(|e| colour[e] = i as u8 + 1);
            }
            let classes = colour_classes(&colour);
            let cdc = class_circuits(g, &classes)?;
            let cover = cover_from_cdc(g, &cdc, EvenSubgraph::new(g, classes[0])?)?;
            let cert = Certificate::Matchings { matchings: tau.matchings, five_cdc: None };
            finish(g, cover, bound, Theorem::PerfectMatchingIndexThree, cert)
        }
        Tau::Exact(_) => {
            let cdc = five_cdc_from_pm_cover(g, &tau.matchings)?;
            let cover = cover_from_cdc(g, &class_circuits(g, &cdc.classes)?, EvenSubgraph::new(g, cdc.classes[4])?)?;
            let cert = Certificate::Matchings { matchings: tau.matchings, five_cdc: Some(cdc) };
            finish(g, cover, bound, Theorem::PerfectMatchingIndexFour, cert)
        }
        Tau::AboveLimit(_) => Err(ConstructionError::TauTooLarge),
    }
}

fn class_circuits(g: &Multigraph, classes: &[EdgeSet]) -> Result<Vec<Circuit>, ConstructionError> {
    let mut out = Vec::new();
    for &c in classes {
        out.extend(EvenSubgraph::new(g, c)?.circuits(g)?);
    }
    Ok(out)
}
