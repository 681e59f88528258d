//! Shortest cycle covers.
//!
//! With edge weights capped at 2, every vertex meets 0 or 2 edges of weight
//! 1, so the weight-1 edges form an even subgraph `C` and the length is
//! `2m - |C|`. The search therefore tries even subgraphs covering `n`,
//! `n - 1`, `n - 2`, ... vertices and asks the demand engine for circuits
//! covering `C` once and everything else twice; the first feasible `C` is
//! optimal. Weight cap 3 runs a branch and bound over circuit multisets,
//! seeded with the cap-2 optimum.

use std::collections::BTreeSet;

use serde::Serialize;

use super::demand::demand_cover_within;
use super::{check_bridgeless, enumerate_circuits, enumerate_perfect_matchings, Budget, DemandOutcome, SolverError};
use crate::graph::{Circuit, CubicGraph, CycleCover, EdgeId, EdgeSet, EvenSubgraph, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SccOptions {
    /// Largest weight an edge may carry: 2 or 3.
    pub cap: u32,
    pub node_limit: u64,
}

impl Default for SccOptions {
    fn default() -> Self {
        SccOptions { cap: 2, node_limit: super::DEFAULT_NODE_LIMIT }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SccResult {
    pub length: usize,
    pub cover: CycleCover,
    /// False when a cap-3 search was cut short; the cover is then the best
    /// one known.
    pub optimal: bool,
    pub weight_cap_used: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightSpectrum {
    pub optimal_length: usize,
    /// Weights each edge takes in at least one optimal cover.
    pub per_edge: Vec<BTreeSet<u32>>,
}

impl WeightSpectrum {
    /// Edges with the same weight in every optimal cover.
    pub fn forced_edges(&self) -> Vec<(EdgeId, u32)> {
        self.per_edge
            .iter()
            .enumerate()
            .filter(|(_, w)| w.len() == 1)
            .map(|(e, w)| (e, *w.iter().next().expect("nonempty")))
            .collect()
    }
}

pub fn shortest_cycle_cover(g: &CubicGraph, opts: SccOptions) -> Result<SccResult, SolverError> {
    check_bridgeless(g)?;
    let (set, circuits) = optimal_cap2(g, opts.node_limit)?;
    let cover = CycleCover::new(circuits);
    let two = SccResult { length: 2 * g.m() - set.len(), cover, optimal: true, weight_cap_used: 2 };
    match opts.cap {
        2 => Ok(two),
        3 => Ok(improve_cap3(g, two, opts.node_limit)),
        cap => Err(SolverError::UnsupportedCap { cap }),
    }
}

fn demands(g: &CubicGraph, c: EdgeSet) -> Vec<u8> {
    (0..g.m()).map(|e| if c.contains(e) { 1 } else { 2 }).collect()
}

/// Even subgraphs covering exactly `n - k` vertices. For `k = 0` these are
/// the 2-factors, listed with fewest odd circuits first.
fn candidates(g: &CubicGraph, k: usize) -> Vec<EdgeSet> {
    if k == 0 {
        let full = g.all_edges();
        let mut fs: Vec<(usize, usize, EdgeSet)> = enumerate_perfect_matchings(g)
            .into_iter()
            .map(|pm| {
                let f = full - pm;
                let cs = EvenSubgraph::new(g, f).and_then(|s| s.circuits(g)).expect("complement of a perfect matching");
                (cs.iter().filter(|c| c.len() % 2 == 1).count(), cs.len(), f)
            })
            .collect();
        fs.sort_by_key(|&(odd, comps, _)| (odd, comps));
        return fs.into_iter().map(|(_, _, f)| f).collect();
    }
    let mut out = Vec::new();
    let mut deg = vec![0u8; g.n()];
    choose(g, 0, k, 0, EdgeSet::EMPTY, &mut deg, &mut out);
    out
}

/// Decides the edges from `v` to higher vertices; edges towards lower ones
/// were fixed when those were processed.
fn choose(g: &CubicGraph, v: VertexId, k: usize, zeros: usize, cur: EdgeSet, deg: &mut [u8], out: &mut Vec<EdgeSet>) {
    if zeros > k || zeros + (g.n() - v) < k {
        return;
    }
    if v == g.n() {
        if zeros == k {
            out.push(cur);
        }
        return;
    }
    let open: Vec<EdgeId> = g.edges_at(v).filter(|&e| g.other_end(e, v) > v).collect();
    for mask in 0u32..(1 << open.len()) {
        let picked: Vec<EdgeId> = (0..open.len()).filter(|i| mask >> i & 1 == 1).map(|i| open[i]).collect();
        let d = deg[v] as usize + picked.len();
        if d != 0 && d != 2 {
            continue;
        }
        if picked.iter().any(|&e| deg[g.other_end(e, v)] >= 2) {
            continue;
        }
        // parallel edges to one neighbour count twice there
        let mut next = cur;
        for &e in &picked {
            next.insert(e);
            deg[g.other_end(e, v)] += 1;
        }
        if picked.iter().all(|&e| deg[g.other_end(e, v)] <= 2) {
            choose(g, v + 1, k, zeros + usize::from(d == 0), next, deg, out);
        }
        for &e in &picked {
            deg[g.other_end(e, v)] -= 1;
        }
    }
}

/// Outcome of trying the candidates of one level.
enum Level {
    Found(EdgeSet, Vec<Circuit>),
    Exhausted,
}

/// Tries every candidate with a small per-candidate budget, growing it for
/// the ones left undecided, until one succeeds or all are refuted.
fn search_level(g: &CubicGraph, cands: &[EdgeSet], global: &mut Budget) -> Result<Level, SolverError> {
    let mut open: Vec<EdgeSet> = cands.to_vec();
    let mut per: u64 = 4_000;
    while !open.is_empty() {
        let mut still = Vec::new();
        for &c in &open {
            let remaining = global.limit.saturating_sub(global.used());
            if remaining == 0 {
                return Err(SolverError::NodeLimitExceeded { limit: global.limit });
            }
            let mut b = Budget::new(per.min(remaining));
            let r = demand_cover_within(g, &demands(g, c), &mut b);
            global.used += b.used().min(b.limit);
            match r {
                Ok(DemandOutcome::Cover(cs)) => return Ok(Level::Found(c, cs)),
                Ok(DemandOutcome::Infeasible) => {}
                Err(SolverError::NodeLimitExceeded { .. }) => still.push(c),
                Err(e) => return Err(e),
            }
        }
        open = still;
        per = per.saturating_mul(8);
    }
    Ok(Level::Exhausted)
}

fn optimal_cap2(g: &CubicGraph, node_limit: u64) -> Result<(EdgeSet, Vec<Circuit>), SolverError> {
    let mut global = Budget::new(node_limit);
    for k in 0..=g.n() {
        let cands = candidates(g, k);
        if let Level::Found(c, cs) = search_level(g, &cands, &mut global)? {
            return Ok((c, cs));
        }
    }
    // k = n is the empty subgraph: a cycle double cover. Every bridgeless
    // cubic graph at desk scale has one, so this is unreachable in practice.
    Err(SolverError::BadConstraint("no cover with edge weights at most 2 exists".into()))
}

/// Looks for a cover with weights up to 3 strictly shorter than `base`.
fn improve_cap3(g: &CubicGraph, base: SccResult, node_limit: u64) -> SccResult {
    // A weight-3 edge forces weight at least 6 at both its ends, so nothing
    // shorter than 2n + 2 can use one; the cap-2 optimum stands.
    let floor = 2 * g.n();
    let mut out = SccResult { weight_cap_used: 3, ..base };
    if out.length <= floor + 1 {
        return out;
    }
    let (found, complete) = cap3_search(g, out.length, node_limit);
    if let Some(cover) = found {
        out.length = cover.length();
        out.cover = cover;
    }
    out.optimal = complete;
    out
}

/// Branch and bound for a cover with weights at most 3 shorter than
/// `upper`. Returns the best cover found and whether the search finished.
fn cap3_search(g: &CubicGraph, upper: usize, node_limit: u64) -> (Option<CycleCover>, bool) {
    let circuits = enumerate_circuits(g);
    let through: Vec<Vec<usize>> =
        (0..g.m()).map(|e| (0..circuits.len()).filter(|&i| circuits[i].contains(e)).collect()).collect();
    let mut bb = Cap3 {
        g,
        circuits: &circuits,
        through: &through,
        weight: vec![0; g.m()],
        chosen: Vec::new(),
        best_len: upper,
        best: None,
        budget: Budget::new(node_limit),
    };
    let complete = bb.search(0).is_ok();
    let cover = bb.best.map(|ids| CycleCover::new(ids.iter().map(|&i| circuits[i].clone()).collect()));
    (cover, complete)
}

struct Cap3<'a> {
    g: &'a CubicGraph,
    circuits: &'a [Circuit],
    through: &'a [Vec<usize>],
    weight: Vec<u32>,
    chosen: Vec<usize>,
    best_len: usize,
    best: Option<Vec<usize>>,
    budget: Budget,
}

impl Cap3<'_> {
    /// Half the sum over vertices of the least even weight each can still
    /// end with (at least 4, at least current plus one per uncovered edge).
    fn lower_bound(&self) -> usize {
        let mut twice = 0;
        for v in 0..self.g.n() {
            let (mut w, mut zeros) = (0, 0);
            for e in self.g.edges_at(v) {
                w += self.weight[e];
                zeros += u32::from(self.weight[e] == 0);
            }
            let need = (w + zeros).max(4);
            twice += need + need % 2;
        }
        twice as usize / 2
    }

    fn search(&mut self, len: usize) -> Result<(), SolverError> {
        self.budget.tick()?;
        let Some(e) = (0..self.g.m()).filter(|&e| self.weight[e] == 0).min_by_key(|&e| self.through[e].len()) else {
            if len < self.best_len {
                self.best_len = len;
                self.best = Some(self.chosen.clone());
            }
            return Ok(());
        };
        if self.lower_bound() >= self.best_len {
            return Ok(());
        }
        let (through, circuits) = (self.through, self.circuits);
        for &i in &through[e] {
            let c = &circuits[i];
            if c.edges().iter().any(|&f| self.weight[f] >= 3) {
                continue;
            }
            c.edges().iter().for_each(|&f| self.weight[f] += 1);
            self.chosen.push(i);
            let r = self.search(len + c.len());
            self.chosen.pop();
            c.edges().iter().for_each(|&f| self.weight[f] -= 1);
            r?;
        }
        Ok(())
    }
}

/// Weights attained by each edge over all optimal covers with weights at
/// most `cap`.
pub fn edge_weight_spectrum(g: &CubicGraph, opts: SccOptions) -> Result<WeightSpectrum, SolverError> {
    check_bridgeless(g)?;
    let best = shortest_cycle_cover(g, opts)?;
    if opts.cap == 3 && best.length > 2 * g.n() + 1 {
        // weight-3 edges could then occur in optimal covers
        return Err(SolverError::UnsupportedCap { cap: 3 });
    }
    let k = best.length - 2 * g.n();
    let mut per_edge = vec![BTreeSet::new(); g.m()];
    let mut global = Budget::new(opts.node_limit);
    for c in candidates(g, k) {
        let new_info = (0..g.m()).any(|e| !per_edge[e].contains(&if c.contains(e) { 1 } else { 2 }));
        if !new_info {
            continue;
        }
        let remaining = global.limit.saturating_sub(global.used());
        let mut b = Budget::new(remaining);
        let r = demand_cover_within(g, &demands(g, c), &mut b);
        global.used += b.used().min(b.limit);
        match r.map_err(|_| SolverError::NodeLimitExceeded { limit: opts.node_limit })? {
            DemandOutcome::Cover(_) => {
                for (e, w) in per_edge.iter_mut().enumerate() {
                    w.insert(if c.contains(e) { 1 } else { 2 });
                }
            }
            DemandOutcome::Infeasible => {}
        }
    }
    Ok(WeightSpectrum { optimal_length: best.length, per_edge })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{flower, petersen};
    use crate::graph::tests::{k4, prism};

    fn scc(g: &CubicGraph, cap: u32) -> SccResult {
        shortest_cycle_cover(g, SccOptions { cap, ..Default::default() }).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(scc(&k4(), 2).length, 8);
        assert_eq!(scc(&prism(), 2).length, 12);
        let p = scc(&petersen(), 2);
        assert_eq!(p.length, 21);
        let report = p.cover.validate(&petersen());
        assert!(report.valid && report.is_one_two_cover);
        assert_eq!(p.cover.weight_one_edges(15).len(), 9);
    }

    #[test]
    fn flower_five() {
        let g = flower(5).unwrap();
        let r = scc(&g, 2);
        assert_eq!(r.length, 40);
        assert!(r.cover.validate(&g).valid);
    }

    #[test]
    fn cap_three_agrees() {
        for g in [k4(), prism(), petersen()] {
            assert_eq!(scc(&g, 3).length, scc(&g, 2).length);
            assert!(scc(&g, 3).optimal);
        }
    }

    #[test]
    fn cap_three_branch_and_bound_matches() {
        for g in [k4(), prism(), petersen()] {
            let two = scc(&g, 2).length;
            let (found, complete) = cap3_search(&g, two + 1, 10_000_000);
            assert!(complete);
            let c = found.unwrap();
            assert_eq!(c.length(), two);
            assert!(c.validate(&g).valid);
            let (none, complete) = cap3_search(&g, two, 10_000_000);
            assert!(complete && none.is_none());
        }
    }

    #[test]
    fn level_candidates() {
        assert_eq!(candidates(&petersen(), 0).len(), 6);
        assert_eq!(candidates(&petersen(), 1).len(), 20);
        assert_eq!(candidates(&k4(), 1).len(), 4);
    }

    #[test]
    fn bridged_graph() {
        let mut e = vec![];
        for off in [0usize, 5] {
            let v = |i: usize| i + off;
            e.extend([
                (v(0), v(1)),
                (v(0), v(2)),
                (v(0), v(3)),
                (v(1), v(2)),
                (v(1), v(4)),
                (v(4), v(3)),
                (v(2), v(3)),
            ]);
        }
        e.push((4, 9));
        let g = CubicGraph::from_edges(&e).unwrap();
        assert!(matches!(shortest_cycle_cover(&g, SccOptions::default()), Err(SolverError::Bridged { .. })));
    }

    #[test]
    fn spectra() {
        let s = edge_weight_spectrum(&k4(), SccOptions::default()).unwrap();
        assert_eq!(s.optimal_length, 8);
        assert!(s.per_edge.iter().all(|w| w.len() == 2));
        let s = edge_weight_spectrum(&petersen(), SccOptions::default()).unwrap();
        assert!(s.per_edge.iter().all(|w| w.contains(&1)));
        assert!(s.forced_edges().is_empty());
    }
}
