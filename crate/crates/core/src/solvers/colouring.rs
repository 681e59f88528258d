use std::collections::VecDeque;

use crate::graph::{EdgeId, Multigraph};

/// A proper 3-edge-colouring (colours 0, 1, 2 indexed by edge id), or `None`
/// if none exists. Graphs with loops or a vertex of degree above 3 have none.
pub fn edge_colouring_3(g: &Multigraph) -> Option<Vec<u8>> {
    if !g.loops().is_empty() || (0..g.n()).any(|v| g.degree(v) > 3) {
        return None;
    }
    // breadth-first edge order keeps each new edge close to coloured ones
    let mut order: Vec<EdgeId> = Vec::with_capacity(g.m());
    let mut seen_edge = vec![false; g.m()];
    let mut seen_vertex = vec![false; g.n()];
    for s in 0..g.n() {
        if seen_vertex[s] {
            continue;
        }
        seen_vertex[s] = true;
        let mut q = VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            for e in g.edges_at(v) {
                if !std::mem::replace(&mut seen_edge[e], true) {
                    order.push(e);
                }
                let w = g.other_end(e, v);
                if !std::mem::replace(&mut seen_vertex[w], true) {
                    q.push_back(w);
                }
            }
        }
    }
    let mut colour = vec![u8::MAX; g.m()];
    assign(g, &order, 0, &mut colour).then_some(colour)
}

fn assign(g: &Multigraph, order: &[EdgeId], i: usize, colour: &mut [u8]) -> bool {
    let Some(&e) = order.get(i) else { return true };
    let [a, b] = g.ends(e);
    let used = |v| g.edges_at(v).filter(|&f| colour[f] != u8::MAX).fold(0u8, |acc, f| acc | 1 << colour[f]);
    let blocked = used(a) | used(b);
    // colours not yet seen anywhere are interchangeable; try only the first
    let fresh = order[..i].iter().map(|&f| colour[f]).max().map_or(0, |c| c + 1);
    for c in 0..3u8.min(fresh + 1) {
        if blocked & (1 << c) == 0 {
            colour[e] = c;
            if assign(g, order, i + 1, colour) {
                return true;
            }
        }
    }
    colour[e] = u8::MAX;
    false
}
