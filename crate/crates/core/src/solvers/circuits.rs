use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graph::{Circuit, EdgeId, Multigraph, VertexId};

/// All circuits of `g` (loops excluded), each once in canonical form, sorted
/// by length and then by edge sequence.
pub fn enumerate_circuits(g: &Multigraph) -> Vec<Circuit> {
    enumerate_circuits_seeded(g, None)
}

/// As [`enumerate_circuits`], exploring in an order shuffled by `seed`. The
/// returned list is the same for every seed.
pub fn enumerate_circuits_seeded(g: &Multigraph, seed: Option<u64>) -> Vec<Circuit> {
    let n = g.n();
    let mut incident: Vec<Vec<EdgeId>> = (0..n).map(|v| g.edges_at(v).filter(|&e| !g.is_loop(e)).collect()).collect();
    let mut starts: Vec<VertexId> = (0..n).collect();
    if let Some(seed) = seed {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        starts.shuffle(&mut rng);
        incident.iter_mut().for_each(|l| l.shuffle(&mut rng));
    }
    let mut out = Vec::new();
    let mut on_path = vec![false; n];
    let mut path: Vec<EdgeId> = Vec::new();
    for s in starts {
        on_path[s] = true;
        walk(g, &incident, s, s, &mut on_path, &mut path, &mut out);
        on_path[s] = false;
    }
    out.sort();
    out
}

/// Extends a path from `s` (through vertices above `s` only) ending at `v`.
/// Each circuit is reported once: in the direction whose first edge is
/// smaller than its closing edge.
fn walk(
    g: &Multigraph,
    incident: &[Vec<EdgeId>],
    s: VertexId,
    v: VertexId,
    on_path: &mut [bool],
    path: &mut Vec<EdgeId>,
    out: &mut Vec<Circuit>,
) {
    for &e in &incident[v] {
        if path.last() == Some(&e) {
            continue;
        }
        let w = g.other_end(e, v);
        if w == s && !path.is_empty() {
            if path[0] < e {
                path.push(e);
                out.push(Circuit::from_edges(g, path).expect("closed simple walk is a circuit"));
                path.pop();
            }
        } else if w > s && !on_path[w] {
            on_path[w] = true;
            path.push(e);
            walk(g, incident, s, w, on_path, path, out);
            path.pop();
            on_path[w] = false;
        }
    }
}
