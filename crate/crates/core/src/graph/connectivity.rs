use std::collections::VecDeque;

use super::{EdgeId, EdgeSet, GraphError, Multigraph};

/// All cut edges, found with an iterative lowpoint DFS that tells parallel
/// edges apart by id.
pub fn bridges(g: &Multigraph) -> Vec<EdgeId> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut out = Vec::new();
    let mut time = 0;
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        // (vertex, edge used to enter, next dart index)
        let mut stack: Vec<(usize, Option<EdgeId>, usize)> = vec![(root, None, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, parent_edge, ref mut i)) = stack.last_mut() {
            if *i < g.degree(v) {
                let d = g.darts_at(v)[*i];
                *i += 1;
                let e = Multigraph::dart_edge(d);
                if Some(e) == parent_edge {
                    continue;
                }
                let w = g.other_end(e, v);
                if disc[w] == usize::MAX {
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, Some(e), 0));
                } else {
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] > disc[p] {
                        out.push(parent_edge.expect("non-root has a parent edge"));
                    }
                }
            }
        }
    }
    out.sort_unstable();
    out
}

pub fn is_bridgeless(g: &Multigraph) -> bool {
    bridges(g).is_empty()
}

pub fn is_connected(g: &Multigraph) -> bool {
    g.components().iter().all(|&c| c == 0)
}

/// Length of a shortest circuit (loops count as length 1), or `None` for a
/// forest.
pub fn girth(g: &Multigraph) -> Option<usize> {
    if !g.loops().is_empty() {
        return Some(1);
    }
    if g.has_parallel_edges() {
        return Some(2);
    }
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; g.n()];
    let mut via = vec![usize::MAX; g.n()];
    for root in 0..g.n() {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[root] = 0;
        let mut q = VecDeque::from([root]);
        while let Some(v) = q.pop_front() {
            if 2 * dist[v] + 1 >= best {
                break;
            }
            for e in g.edges_at(v) {
                if e == via[v] && v != root {
                    continue;
                }
                let w = g.other_end(e, v);
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    via[w] = e;
                    q.push_back(w);
                } else {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

/// Decides whether every edge cut separating two circuit-bearing parts has at
/// least `k` edges, by scanning all edge subsets of size below `k`.
pub fn cyclic_connectivity_at_least(g: &Multigraph, k: usize) -> Result<bool, GraphError> {
    if k > 4 {
        return Err(GraphError::Unsupported { k });
    }
    let m = g.m();
    let mut chosen = Vec::with_capacity(k);
    for size in 0..k {
        if has_cyclic_cut(g, size, 0, m, &mut chosen) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn has_cyclic_cut(g: &Multigraph, size: usize, from: usize, m: usize, chosen: &mut Vec<EdgeId>) -> bool {
    if chosen.len() == size {
        let removed: EdgeSet = chosen.iter().copied().collect();
        return cyclic_components(g, removed) >= 2;
    }
    for e in from..m {
        chosen.push(e);
        let found = has_cyclic_cut(g, size, e + 1, m, chosen);
        chosen.pop();
        if found {
            return true;
        }
    }
    false
}

/// Number of components of `g - removed` that contain a circuit.
fn cyclic_components(g: &Multigraph, removed: EdgeSet) -> usize {
    let n = g.n();
    let mut comp = vec![usize::MAX; n];
    let mut count = 0;
    let mut stack = Vec::new();
    for s in 0..n {
        if comp[s] != usize::MAX {
            continue;
        }
        comp[s] = s;
        stack.push(s);
        let (mut verts, mut half_edges) = (0usize, 0usize);
        while let Some(v) = stack.pop() {
            verts += 1;
            for e in g.edges_at(v) {
                if removed.contains(e) {
                    continue;
                }
                half_edges += 1;
                let w = g.other_end(e, v);
                if comp[w] == usize::MAX {
                    comp[w] = s;
                    stack.push(w);
                }
            }
        }
        if half_edges / 2 >= verts {
            count += 1;
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{k4, prism};
    use crate::graph::CubicGraph;

    /// Two copies of K4 with one edge subdivided, joined by a bridge.
    fn bridged() -> CubicGraph {
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
        CubicGraph::from_edges(&e).unwrap()
    }

    #[test]
    fn bridge_detection() {
        assert!(is_bridgeless(&k4()));
        let g = bridged();
        assert_eq!(bridges(&g), vec![g.m() - 1]);
    }

    #[test]
    fn parallel_edges_are_not_bridges() {
        let g = Multigraph::new(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(is_bridgeless(&g));
    }

    #[test]
    fn girths() {
        assert_eq!(girth(&k4()), Some(3));
        assert_eq!(girth(&prism()), Some(3));
        let k33 =
            CubicGraph::from_edges(&[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)]).unwrap();
        assert_eq!(girth(&k33), Some(4));
    }

    #[test]
    fn k4_is_cyclically_4_connected() {
        assert!(cyclic_connectivity_at_least(&k4(), 4).unwrap());
    }

    #[test]
    fn prism_has_a_cyclic_3_cut() {
        assert!(cyclic_connectivity_at_least(&prism(), 3).unwrap());
        assert!(!cyclic_connectivity_at_least(&prism(), 4).unwrap());
    }

    #[test]
    fn k_above_four_unsupported() {
        assert!(matches!(cyclic_connectivity_at_least(&k4(), 5), Err(GraphError::Unsupported { k: 5 })));
    }
}
