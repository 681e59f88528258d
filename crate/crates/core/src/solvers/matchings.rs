use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::SolverError;
use crate::graph::{EdgeId, EdgeSet, EvenSubgraph, Multigraph, VertexId};

/// All perfect matchings, sorted by their edge-id sequences.
pub fn enumerate_perfect_matchings(g: &Multigraph) -> Vec<EdgeSet> {
    enumerate_perfect_matchings_seeded(g, None)
}

/// As [`enumerate_perfect_matchings`], exploring in an order shuffled by
/// `seed`. The returned list is the same for every seed.
pub fn enumerate_perfect_matchings_seeded(g: &Multigraph, seed: Option<u64>) -> Vec<EdgeSet> {
    let n = g.n();
    let mut incident: Vec<Vec<EdgeId>> = (0..n).map(|v| g.edges_at(v).filter(|&e| !g.is_loop(e)).collect()).collect();
    let mut order: Vec<VertexId> = (0..n).collect();
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        order.shuffle(&mut rng);
        incident.iter_mut().for_each(|l| l.shuffle(&mut rng));
    }
    let mut out = Vec::new();
    if n.is_multiple_of(2) {
        let mut matched = vec![false; n];
        extend(g, &incident, &order, 0, &mut matched, EdgeSet::EMPTY, &mut out);
    }
    out.sort_by_cached_key(|m: &EdgeSet| m.iter().collect::<Vec<_>>());
    out
}

fn extend(
    g: &Multigraph,
    incident: &[Vec<EdgeId>],
    order: &[VertexId],
    mut i: usize,
    matched: &mut [bool],
    cur: EdgeSet,
    out: &mut Vec<EdgeSet>,
) {
    while i < order.len() && matched[order[i]] {
        i += 1;
    }
    if i == order.len() {
        out.push(cur);
        return;
    }
    let v = order[i];
    matched[v] = true;
    for &e in &incident[v] {
        let w = g.other_end(e, v);
        if !matched[w] {
            matched[w] = true;
            let mut next = cur;
            next.insert(e);
            extend(g, incident, order, i + 1, matched, next, out);
            matched[w] = false;
        }
    }
    matched[v] = false;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum Tau {
    Exact(usize),
    /// No cover by at most this many perfect matchings exists.
    AboveLimit(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TauResult {
    pub tau: Tau,
    /// Witness matchings (empty when above the limit).
    pub matchings: Vec<EdgeSet>,
}

/// Smallest number of perfect matchings whose union is every edge, searched
/// up to `limit`.
pub fn perfect_matching_index(g: &Multigraph, limit: usize) -> TauResult {
    let pms = enumerate_perfect_matchings(g);
    let full = g.all_edges();
    let union = pms.iter().fold(EdgeSet::EMPTY, |a, &b| a | b);
    if union != full || g.m() == 0 {
        return TauResult { tau: Tau::AboveLimit(limit), matchings: Vec::new() };
    }
    let containing: Vec<Vec<usize>> =
        (0..g.m()).map(|e| (0..pms.len()).filter(|&i| pms[i].contains(e)).collect()).collect();
    let per = g.n() / 2;
    for k in 1..=limit {
        let mut chosen = Vec::with_capacity(k);
        if cover_search(&pms, &containing, full, EdgeSet::EMPTY, k, per, &mut chosen) {
            let matchings = chosen.iter().map(|&i| pms[i]).collect();
            return TauResult { tau: Tau::Exact(k), matchings };
        }
    }
    TauResult { tau: Tau::AboveLimit(limit), matchings: Vec::new() }
}

fn cover_search(
    pms: &[EdgeSet],
    containing: &[Vec<usize>],
    full: EdgeSet,
    covered: EdgeSet,
    left: usize,
    per: usize,
    chosen: &mut Vec<usize>,
) -> bool {
    let uncovered = full - covered;
    if uncovered.is_empty() {
        return true;
    }
    if uncovered.len() > left * per {
        return false;
    }
    let e = uncovered.iter().min_by_key(|&e| containing[e].len()).expect("nonempty");
    for &i in &containing[e] {
        chosen.push(i);
        if cover_search(pms, containing, full, covered | pms[i], left - 1, per, chosen) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Minimum number of odd circuits over all 2-factors, with a witness. Among
/// optimal 2-factors the one with fewest circuits is returned.
pub fn oddness(g: &Multigraph) -> Result<(usize, EvenSubgraph), SolverError> {
    let full = g.all_edges();
    let mut best: Option<((usize, usize), EdgeSet)> = None;
    for pm in enumerate_perfect_matchings(g) {
        let f = full - pm;
        let Ok(sub) = EvenSubgraph::new(g, f) else { continue };
        let circuits = sub.circuits(g)?;
        let odd = circuits.iter().filter(|c| c.len() % 2 == 1).count();
        let key = (odd, circuits.len());
        if best.as_ref().is_none_or(|(k, _)| key < *k) {
            best = Some((key, f));
        }
    }
    let ((odd, _), f) = best.ok_or(SolverError::NoTwoFactor)?;
    Ok((odd, EvenSubgraph::new(g, f)?))
}
