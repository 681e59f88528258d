use serde::Serialize;

use super::SolverError;
use crate::graph::{EdgeId, Multigraph, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DisjointPaths {
    /// Each path as its edge sequence from `s` to `t`.
    pub paths: Vec<Vec<EdgeId>>,
    /// Each path's vertex sequence, `s` first and `t` last.
    pub vertices: Vec<Vec<VertexId>>,
    /// Total number of edges over the three paths.
    pub total_edges: usize,
}

struct Arc {
    to: usize,
    cap: i32,
    cost: i32,
    edge: Option<EdgeId>,
}

struct Network {
    arcs: Vec<Arc>,
    out: Vec<Vec<usize>>,
}

impl Network {
    fn add(&mut self, from: usize, to: usize, cap: i32, cost: i32, edge: Option<EdgeId>) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap, cost, edge });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc { to: from, cap: 0, cost: -cost, edge: None });
    }

    /// One cheapest augmenting path by Bellman-Ford; returns whether found.
    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let nodes = self.out.len();
        let mut dist = vec![i32::MAX; nodes];
        let mut via = vec![usize::MAX; nodes];
        dist[source] = 0;
        for _ in 0..nodes {
            let mut changed = false;
            for u in 0..nodes {
                if dist[u] == i32::MAX {
                    continue;
                }
                for &a in &self.out[u] {
                    let arc = &self.arcs[a];
                    if arc.cap > 0 && dist[u] + arc.cost < dist[arc.to] {
                        dist[arc.to] = dist[u] + arc.cost;
                        via[arc.to] = a;
                        changed = true;
                    }
                }
            }
            if !changed {
                break;
            }
        }
        if dist[sink] == i32::MAX {
            return false;
        }
        let mut v = sink;
        while v != source {
            let a = via[v];
            self.arcs[a].cap -= 1;
            self.arcs[a ^ 1].cap += 1;
            v = self.arcs[a ^ 1].to;
        }
        true
    }
}

/// Three pairwise edge-disjoint `s`-`t` paths with the fewest edges in total
/// (unit-capacity min-cost flow). Paths may share intermediate vertices: in a
/// contracted 2-factor those are circuits that several paths can cross.
/// Every path is simple, because a min-cost flow carries no cycle.
pub fn three_disjoint_paths(g: &Multigraph, s: VertexId, t: VertexId) -> Result<DisjointPaths, SolverError> {
    for v in [s, t] {
        if v >= g.n() {
            return Err(crate::graph::GraphError::VertexOutOfRange { vertex: v, n: g.n() }.into());
        }
    }
    if s == t {
        return Err(SolverError::SameEndpoints);
    }
    let mut net = Network { arcs: Vec::new(), out: vec![Vec::new(); g.n()] };
    for e in 0..g.m() {
        let [a, b] = g.ends(e);
        if a != b {
            net.add(a, b, 1, 1, Some(e));
            net.add(b, a, 1, 1, Some(e));
        }
    }
    for _ in 0..3 {
        if !net.augment(s, t) {
            return Err(SolverError::NoThreePaths { s, t });
        }
    }
    let mut paths = Vec::new();
    let mut vertices = Vec::new();
    for _ in 0..3 {
        let (mut v, mut p, mut vs) = (s, Vec::new(), vec![s]);
        while v != t {
            let a = *net.out[v]
                .iter()
                .find(|&&a| a % 2 == 0 && net.arcs[a].cap == 0 && net.arcs[a ^ 1].cap > 0)
                .expect("flow conservation");
            // consume the unit so later walks take other branches
            net.arcs[a ^ 1].cap -= 1;
            let arc = &net.arcs[a];
            p.push(arc.edge.expect("forward arcs carry an edge"));
            v = arc.to;
            vs.push(v);
        }
        paths.push(p);
        vertices.push(vs);
    }
    paths_sorted(&mut paths, &mut vertices);
    let total_edges = paths.iter().map(Vec::len).sum();
    Ok(DisjointPaths { paths, vertices, total_edges })
}

fn paths_sorted(paths: &mut Vec<Vec<EdgeId>>, vertices: &mut Vec<Vec<VertexId>>) {
    let mut both: Vec<_> = paths.drain(..).zip(vertices.drain(..)).collect();
    both.sort();
    for (p, v) in both {
        paths.push(p);
        vertices.push(v);
    }
}
