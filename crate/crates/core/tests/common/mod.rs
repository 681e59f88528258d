//! Brute-force oracles written independently of the solvers, and the small
//! graph corpus used by several test targets.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use cover_core::families::{connected_cubic_graphs, flower, goldberg, parse_graph6, petersen};
use cover_core::graph::is_bridgeless;
use cover_core::{CubicGraph, EdgeSet, Multigraph};

/// Every connected bridgeless simple cubic graph on at most 10 vertices.
pub fn small_corpus() -> Vec<CubicGraph> {
    (4..=10).step_by(2).flat_map(connected_cubic_graphs).filter(|g| is_bridgeless(g)).collect()
}

pub fn named_snarks() -> Vec<(&'static str, CubicGraph)> {
    vec![
        ("petersen", petersen()),
        ("flower 5", flower(5).unwrap()),
        ("flower 7", flower(7).unwrap()),
        ("goldberg 5", goldberg(5).unwrap()),
    ]
}

pub fn snarks18() -> Vec<CubicGraph> {
    include_str!("../data/snarks18.g6").lines().filter(|l| !l.is_empty()).map(|l| parse_graph6(l).unwrap()).collect()
}

/// All circuits as edge sets, found by walking simple paths that start and
/// end at their least vertex and deduplicating by edge set.
pub fn all_circuits(g: &Multigraph) -> Vec<EdgeSet> {
    fn walk(
        g: &Multigraph,
        root: usize,
        v: usize,
        on_path: &mut Vec<bool>,
        edges: EdgeSet,
        seen: &mut HashSet<EdgeSet>,
    ) {
        for e in g.edges_at(v) {
            if edges.contains(e) {
                continue;
            }
            let w = g.other_end(e, v);
            let mut next = edges;
            next.insert(e);
            if w == root {
                seen.insert(next);
            } else if w > root && !on_path[w] {
                on_path[w] = true;
                walk(g, root, w, on_path, next, seen);
                on_path[w] = false;
            }
        }
    }
    let mut seen = HashSet::new();
    let mut on_path = vec![false; g.n()];
    for root in 0..g.n() {
        on_path[root] = true;
        walk(g, root, root, &mut on_path, EdgeSet::EMPTY, &mut seen);
        on_path[root] = false;
    }
    let mut out: Vec<EdgeSet> = seen.into_iter().collect();
    out.sort_by_key(|s| (s.len(), s.iter().collect::<Vec<_>>()));
    out
}

/// Minimum total length of a multiset of circuits covering every edge, with
/// every multiset achieving it (as sorted circuit indices into `circuits`).
/// An optimal multiset never repeats a circuit, so branching over circuits
/// through the first uncovered edge enumerates all of them.
pub fn min_covers(m: usize, circuits: &[EdgeSet]) -> (usize, BTreeSet<Vec<usize>>) {
    struct S<'a> {
        circuits: &'a [EdgeSet],
        through: Vec<Vec<usize>>,
        full: EdgeSet,
        best: usize,
        found: BTreeSet<Vec<usize>>,
    }
    fn dfs(s: &mut S, covered: EdgeSet, len: usize, chosen: &mut Vec<usize>) {
        if covered == s.full {
            if len < s.best {
                s.best = len;
                s.found.clear();
            }
            let mut key = chosen.clone();
            key.sort_unstable();
            s.found.insert(key);
            return;
        }
        let open = s.full - covered;
        if len + open.len() > s.best {
            return;
        }
        let e = open.iter().min_by_key(|&e| s.through[e].len()).unwrap();
        for i in s.through[e].clone() {
            let l = len + s.circuits[i].len();
            if l <= s.best {
                chosen.push(i);
                dfs(s, covered | s.circuits[i], l, chosen);
                chosen.pop();
            }
        }
    }
    let through = (0..m).map(|e| (0..circuits.len()).filter(|&i| circuits[i].contains(e)).collect()).collect();
    let mut s = S { circuits, through, full: EdgeSet::full(m), best: usize::MAX, found: BTreeSet::new() };
    dfs(&mut s, EdgeSet::EMPTY, 0, &mut Vec::new());
    (s.best, s.found)
}

/// Whether some multiset of circuits covers edge `e` exactly `demand[e]`
/// times for every edge.
pub fn exact_cover_exists(circuits: &[EdgeSet], demand: &[u8]) -> bool {
    fn dfs(circuits: &[EdgeSet], through: &[Vec<usize>], rem: &mut Vec<u8>, min_index: &mut Vec<usize>) -> bool {
        let Some(e) = (0..rem.len()).find(|&e| rem[e] > 0) else { return true };
        for &i in &through[e] {
            // a circuit picked again for the same edge comes no earlier than before
            if i < min_index[e] || circuits[i].iter().any(|x| rem[x] == 0) {
                continue;
            }
            circuits[i].iter().for_each(|x| rem[x] -= 1);
            let saved = min_index[e];
            min_index[e] = i;
            let ok = dfs(circuits, through, rem, min_index);
            min_index[e] = saved;
            circuits[i].iter().for_each(|x| rem[x] += 1);
            if ok {
                return true;
            }
        }
        false
    }
    let m = demand.len();
    let through: Vec<Vec<usize>> =
        (0..m).map(|e| (0..circuits.len()).filter(|&i| circuits[i].contains(e)).collect()).collect();
    dfs(circuits, &through, &mut demand.to_vec(), &mut vec![0; m])
}

/// Perfect matchings by brute force over edge subsets of size n/2 built
/// vertex by vertex.
pub fn perfect_matchings(g: &Multigraph) -> Vec<EdgeSet> {
    fn go(g: &Multigraph, matched: &mut Vec<bool>, cur: EdgeSet, out: &mut Vec<EdgeSet>) {
        let Some(v) = (0..g.n()).find(|&v| !matched[v]) else {
            out.push(cur);
            return;
        };
        matched[v] = true;
        for e in g.edges_at(v) {
            let w = g.other_end(e, v);
            if w != v && !matched[w] {
                matched[w] = true;
                let mut next = cur;
                next.insert(e);
                go(g, matched, next, out);
                matched[w] = false;
            }
        }
        matched[v] = false;
    }
    let mut out = Vec::new();
    go(g, &mut vec![false; g.n()], EdgeSet::EMPTY, &mut out);
    out
}
