//! Exhaustive enumeration of small connected simple cubic graphs.
//!
//! Graphs are generated with breadth-first labellings (vertex 0 is the root,
//! each vertex's newly discovered neighbours receive consecutive labels) and
//! deduplicated up to isomorphism. Practical up to about 14 vertices.

use std::collections::{HashMap, VecDeque};

use crate::graph::{CubicGraph, Multigraph, VertexId};

/// All connected simple cubic graphs on `n` vertices, one per isomorphism
/// class, in generation order.
pub fn connected_cubic_graphs(n: usize) -> Vec<CubicGraph> {
    if n < 4 || n % 2 == 1 {
        return Vec::new();
    }
    let mut gen = Generator { n, adj: vec![Vec::new(); n], next_new: 1, found: Vec::new() };
    gen.fill(0, 0);
    let mut classes: HashMap<Vec<Vec<usize>>, Vec<usize>> = HashMap::new();
    let mut out: Vec<CubicGraph> = Vec::new();
    for edges in gen.found {
        let g = CubicGraph::new(n, &edges).expect("generator emits cubic graphs");
        let key = invariant(&g);
        let bucket = classes.entry(key).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&out[i], &g)) {
            continue;
        }
        bucket.push(out.len());
        out.push(g);
    }
    out
}

struct Generator {
    n: usize,
    adj: Vec<Vec<VertexId>>,
    next_new: usize,
    found: Vec<Vec<(VertexId, VertexId)>>,
}

impl Generator {
    /// Completes vertex `v`'s neighbourhood, choosing higher neighbours in
    /// increasing order starting from `min_nb`.
    fn fill(&mut self, v: usize, min_nb: usize) {
        if v == self.n {
            let mut edges = Vec::with_capacity(3 * self.n / 2);
            for u in 0..self.n {
                edges.extend(self.adj[u].iter().filter(|&&w| w > u).map(|&w| (u, w)));
            }
            edges.sort_unstable();
            self.found.push(edges);
            return;
        }
        if v > 0 && v >= self.next_new {
            return; // disconnected labelling
        }
        if self.adj[v].len() == 3 {
            self.fill(v + 1, 0);
            return;
        }
        let lo = min_nb.max(v + 1);
        // existing, already discovered vertices
        for w in lo..self.next_new {
            if self.adj[w].len() < 3 && !self.adj[v].contains(&w) {
                self.link(v, w);
                self.fill(v, w + 1);
                self.unlink(v, w);
            }
        }
        if self.next_new < self.n && self.next_new >= lo {
            let w = self.next_new;
            self.next_new += 1;
            self.link(v, w);
            self.fill(v, w + 1);
            self.unlink(v, w);
            self.next_new -= 1;
        }
    }

    fn link(&mut self, a: usize, b: usize) {
        self.adj[a].push(b);
        self.adj[b].push(a);
    }

    fn unlink(&mut self, a: usize, b: usize) {
        self.adj[a].pop();
        self.adj[b].pop();
    }
}

fn bfs_layers(g: &Multigraph, root: VertexId) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[root] = 0;
    let mut q = VecDeque::from([root]);
    let mut layers = vec![0usize];
    while let Some(v) = q.pop_front() {
        layers[dist[v]] += 1;
        for e in g.edges_at(v) {
            let w = g.other_end(e, v);
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                if layers.len() <= dist[w] {
                    layers.push(0);
                }
                q.push_back(w);
            }
        }
    }
    layers
}

fn invariant(g: &Multigraph) -> Vec<Vec<usize>> {
    let mut inv: Vec<_> = (0..g.n()).map(|v| bfs_layers(g, v)).collect();
    inv.sort();
    inv
}

fn multiplicities(g: &Multigraph) -> Vec<Vec<u8>> {
    let n = g.n();
    let mut a = vec![vec![0u8; n]; n];
    for (u, v) in g.edge_list() {
        a[u][v] += 1;
        if u != v {
            a[v][u] += 1;
        }
    }
    a
}

/// Exact isomorphism test by backtracking along a breadth-first order.
pub fn are_isomorphic(g: &Multigraph, h: &Multigraph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    if g.n() == 0 {
        return true;
    }
    let mut gd: Vec<_> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut hd: Vec<_> = (0..h.n()).map(|v| h.degree(v)).collect();
    gd.sort_unstable();
    hd.sort_unstable();
    if gd != hd || invariant(g) != invariant(h) {
        return false;
    }
    let (ga, ha) = (multiplicities(g), multiplicities(h));
    let g_sig: Vec<_> = (0..g.n()).map(|v| bfs_layers(g, v)).collect();
    let h_sig: Vec<_> = (0..h.n()).map(|v| bfs_layers(h, v)).collect();
    // Order g's vertices so every vertex after the first of its component has
    // an earlier neighbour.
    let mut order = Vec::with_capacity(g.n());
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for e in g.edges_at(v) {
                let w = g.other_end(e, v);
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    let mut map = vec![usize::MAX; g.n()];
    let mut used = vec![false; h.n()];
    extend(0, &order, &ga, &ha, &g_sig, &h_sig, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn extend(
    i: usize,
    order: &[usize],
    ga: &[Vec<u8>],
    ha: &[Vec<u8>],
    g_sig: &[Vec<usize>],
    h_sig: &[Vec<usize>],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    for x in 0..ha.len() {
        if used[x] || g_sig[v] != h_sig[x] || ga[v][v] != ha[x][x] {
            continue;
        }
        let consistent = order[..i].iter().all(|&u| ga[v][u] == ha[x][map[u]]);
        if !consistent {
            continue;
        }
        map[v] = x;
        used[x] = true;
        if extend(i + 1, order, ga, ha, g_sig, h_sig, map, used) {
            return true;
        }
        used[x] = false;
        map[v] = usize::MAX;
    }
    false
}
