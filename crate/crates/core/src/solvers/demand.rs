//! Exact circuit multicover with prescribed multiplicities.
//!
//! Given a demand `d(e)` for every edge of a cubic graph, find circuits such
//! that every edge lies in exactly `d(e)` of them. At a vertex with edges
//! `a, b, c` the number of circuits passing through the pair `{a, b}` is
//! forced to `(d(a) + d(b) - d(c)) / 2`, so each vertex carries fixed
//! transition quotas. Circuits are grown one at a time from the first edge
//! (in breadth-first order) that still has demand, always leaving it towards
//! its second endpoint.

use std::collections::VecDeque;

use super::{Budget, SolverError};
use crate::graph::{Circuit, CubicGraph, EdgeId, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DemandOutcome {
    Cover(Vec<Circuit>),
    Infeasible,
}

/// Searches for circuits meeting `demand` exactly. Aborts with
/// `NodeLimitExceeded` after `node_limit` search steps.
pub fn demand_cover(g: &CubicGraph, demand: &[u8], node_limit: u64) -> Result<DemandOutcome, SolverError> {
    demand_cover_within(g, demand, &mut Budget::new(node_limit))
}

pub(crate) fn demand_cover_within(
    g: &CubicGraph,
    demand: &[u8],
    budget: &mut Budget,
) -> Result<DemandOutcome, SolverError> {
    match Engine::new(g, demand) {
        None => Ok(DemandOutcome::Infeasible),
        Some(mut eng) => {
            if eng.next_circuit(budget, None)? {
                let mut out: Vec<Circuit> =
                    eng.done.iter().map(|c| Circuit::from_edges(g, c).expect("engine closes circuits")).collect();
                out.sort();
                Ok(DemandOutcome::Cover(out))
            } else {
                Ok(DemandOutcome::Infeasible)
            }
        }
    }
}

struct Engine<'a> {
    g: &'a CubicGraph,
    rem: Vec<u8>,
    /// `quota[3v + t]`: circuits still to pass `v` through the two edges
    /// other than its `t`-th edge.
    quota: Vec<u8>,
    /// Edges at each vertex in dart order.
    at: Vec<[EdgeId; 3]>,
    order: Vec<EdgeId>,
    visited: Vec<bool>,
    path: Vec<EdgeId>,
    done: Vec<Vec<EdgeId>>,
    seen: Vec<u32>,
    stamp: u32,
    queue: VecDeque<VertexId>,
}

impl<'a> Engine<'a> {
    fn new(g: &'a CubicGraph, demand: &[u8]) -> Option<Self> {
        let n = g.n();
        let at: Vec<[EdgeId; 3]> = (0..n).map(|v| g.darts3(v).map(crate::graph::Multigraph::dart_edge)).collect();
        let mut quota = vec![0u8; 3 * n];
        for v in 0..n {
            let d = at[v].map(|e| demand[e] as i32);
            for t in 0..3 {
                let (a, b) = ((t + 1) % 3, (t + 2) % 3);
                let twice = d[a] + d[b] - d[t];
                if twice < 0 || twice % 2 != 0 {
                    return None;
                }
                quota[3 * v + t] = (twice / 2) as u8;
            }
        }
        // breadth-first edge order from vertex 0
        let mut order = Vec::with_capacity(g.m());
        let mut seen_e = vec![false; g.m()];
        let mut seen_v = vec![false; n];
        for s in 0..n {
            if seen_v[s] {
                continue;
            }
            seen_v[s] = true;
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for &e in &at[v] {
                    if !std::mem::replace(&mut seen_e[e], true) {
                        order.push(e);
                    }
                    let w = g.other_end(e, v);
                    if !std::mem::replace(&mut seen_v[w], true) {
                        q.push_back(w);
                    }
                }
            }
        }
        Some(Engine {
            g,
            rem: demand.to_vec(),
            quota,
            at,
            order,
            visited: vec![false; n],
            path: Vec::new(),
            done: Vec::new(),
            seen: vec![0; n],
            stamp: 0,
            queue: VecDeque::new(),
        })
    }

    fn slot(&self, v: VertexId, a: EdgeId, b: EdgeId) -> usize {
        let pos = |e| self.at[v].iter().position(|&x| x == e).expect("edge at vertex");
        3 * v + (3 - pos(a) - pos(b))
    }

    /// Starts the next circuit, or reports success when no demand is left.
    /// `prev` is the circuit closed just before; when it began at the same
    /// edge, the new one must not be lexicographically smaller.
    fn next_circuit(&mut self, budget: &mut Budget, prev: Option<usize>) -> Result<bool, SolverError> {
        let Some(&e0) = self.order.iter().find(|&&e| self.rem[e] > 0) else { return Ok(true) };
        let prev = prev.filter(|&i| self.done[i][0] == e0);
        let [u, w] = self.g.ends(e0);
        self.visited[u] = true;
        self.visited[w] = true;
        self.rem[e0] -= 1;
        self.path.push(e0);
        let found = self.extend(budget, u, w, e0, prev)?;
        if !found {
            self.path.pop();
            self.rem[e0] += 1;
            self.visited[u] = false;
            self.visited[w] = false;
        }
        Ok(found)
    }

    /// Can `u` still be reached from `v` (entered by `via`) through unvisited
    /// vertices along edges with demand left?
    fn can_return(&mut self, u: VertexId, v: VertexId, via: EdgeId) -> bool {
        self.stamp += 1;
        let stamp = self.stamp;
        self.queue.clear();
        self.queue.push_back(v);
        self.seen[v] = stamp;
        while let Some(x) = self.queue.pop_front() {
            for &e in &self.at[x] {
                if self.rem[e] == 0 || (x == v && e == via) {
                    continue;
                }
                let y = self.g.other_end(e, x);
                if y == u {
                    return true;
                }
                if !self.visited[y] && self.seen[y] != stamp {
                    self.seen[y] = stamp;
                    self.queue.push_back(y);
                }
            }
        }
        false
    }

    /// `prev` is set while the path so far equals a prefix of that circuit.
    fn extend(
        &mut self,
        budget: &mut Budget,
        u: VertexId,
        v: VertexId,
        via: EdgeId,
        prev: Option<usize>,
    ) -> Result<bool, SolverError> {
        budget.tick()?;
        if !self.can_return(u, v, via) {
            return Ok(false);
        }
        let e0 = self.path[0];
        let depth = self.path.len();
        // Equal prefixes close at the same point, so `done[i]` is longer.
        let bound = prev.map(|i| self.done[i][depth]);
        let mut next: Vec<EdgeId> = self.at[v].iter().copied().filter(|&e| e != via && self.rem[e] > 0).collect();
        next.sort_unstable();
        for e in next {
            if bound.is_some_and(|b| e < b) {
                continue;
            }
            let s = self.slot(v, via, e);
            if self.quota[s] == 0 {
                continue;
            }
            let x = self.g.other_end(e, v);
            let tight = prev.filter(|_| bound == Some(e));
            if x == u {
                let s0 = self.slot(u, e, e0);
                if self.quota[s0] == 0 {
                    continue;
                }
                self.quota[s] -= 1;
                self.quota[s0] -= 1;
                self.rem[e] -= 1;
                self.path.push(e);
                let closed = std::mem::take(&mut self.path);
                self.mark(&closed, false);
                self.done.push(closed);
                if self.next_circuit(budget, Some(self.done.len() - 1))? {
                    return Ok(true);
                }
                let mut closed = self.done.pop().expect("pushed above");
                self.mark(&closed, true);
                closed.pop();
                self.path = closed;
                self.rem[e] += 1;
                self.quota[s0] += 1;
                self.quota[s] += 1;
            } else if !self.visited[x] {
                self.quota[s] -= 1;
                self.rem[e] -= 1;
                self.visited[x] = true;
                self.path.push(e);
                if self.extend(budget, u, x, e, tight)? {
                    return Ok(true);
                }
                self.path.pop();
                self.visited[x] = false;
                self.rem[e] += 1;
                self.quota[s] += 1;
            }
        }
        Ok(false)
    }

    fn mark(&mut self, circuit: &[EdgeId], on: bool) {
        for &e in circuit {
            for x in self.g.ends(e) {
                self.visited[x] = on;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::petersen;
    use crate::graph::tests::k4;
    use crate::graph::{CycleCover, EdgeSet};

    fn cover(g: &CubicGraph, demand: &[u8]) -> Option<Vec<Circuit>> {
        match demand_cover(g, demand, 1_000_000).unwrap() {
            DemandOutcome::Cover(c) => Some(c),
            DemandOutcome::Infeasible => None,
        }
    }

    fn weights_match(g: &CubicGraph, cs: Vec<Circuit>, demand: &[u8]) {
        let w = CycleCover::new(cs).edge_weights(g.m());
        assert_eq!(w.iter().map(|&x| x as u8).collect::<Vec<_>>(), demand);
    }

    #[test]
    fn double_cover_of_k4() {
        let g = k4();
        let d = vec![2; 6];
        weights_match(&g, cover(&g, &d).unwrap(), &d);
    }

    #[test]
    fn k4_around_a_four_circuit() {
        // 4-circuit 0-1-3-2 once, chords (0,3) and (1,2) twice
        let g = k4();
        let c4: EdgeSet = [0, 1, 4, 5].into_iter().collect();
        let d: Vec<u8> = (0..6).map(|e| if c4.contains(e) { 1 } else { 2 }).collect();
        let cs = cover(&g, &d).unwrap();
        assert_eq!(cs.iter().map(Circuit::len).sum::<usize>(), 8);
        weights_match(&g, cs, &d);
    }

    #[test]
    fn parity_violation_is_infeasible() {
        let g = k4();
        assert!(cover(&g, &[1, 1, 1, 2, 2, 2]).is_none());
    }

    #[test]
    fn petersen_two_factors_do_not_extend() {
        let g = petersen();
        // outer and inner pentagons once, spokes twice
        let d: Vec<u8> = (0..15).map(|e| if (5..10).contains(&e) { 2 } else { 1 }).collect();
        assert!(cover(&g, &d).is_none());
    }

    #[test]
    fn node_limit_is_reported() {
        let g = petersen();
        let d = vec![2; 15];
        assert_eq!(demand_cover(&g, &d, 3).unwrap_err(), SolverError::NodeLimitExceeded { limit: 3 });
    }
}
