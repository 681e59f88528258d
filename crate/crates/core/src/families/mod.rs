//! Named graph families and text formats.
//!
//! Vertex numbering conventions:
//!
//! - Petersen: outer pentagon `0..5`, inner pentagram `5..10`, spoke `i -- i+5`.
//!   Edge ids are outer edges `0..5` (`i -- i+1`), spokes `5..10`, inner edges
//!   `10..15` (`5+i -- 5+(i+2)%5`). The [`crate::petersen`] module uses this
//!   labelled copy as its reference graph.
//! - Flower snark `J_k`: `a_i = i`, `b_i = k+i`, `c_i = 2k+i`, `d_i = 3k+i`;
//!   the `b` vertices form a `k`-cycle and the `c`, `d` vertices one `2k`-cycle
//!   `c_0 .. c_{k-1} d_0 .. d_{k-1}`.
//! - Goldberg snark `G_k`: block `i` occupies vertices `8i..8i+8`. A block is
//!   the Petersen graph minus the path `1-0-4` (seven vertices, local ids of
//!   Petersen vertices `2,3,5,6,7,8,9` mapped to `0..7`) plus a hub `8i+7`.
//!   The hubs form a `k`-cycle and each hub is joined to the block's copy of
//!   Petersen vertex 5. Consecutive blocks are linked by `3_i -- 2_{i+1}` and
//!   `9_i -- 6_{i+1}` (Petersen labels). Descriptions of this family differ in
//!   how the two links between blocks are paired; this is the pairing used
//!   here.
//! - Permutation graph: outer cycle `0..k`, inner cycle `k..2k`, and the
//!   matching `i -- k + perm[i]`.

mod adjacency;
mod graph6;
mod small;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{CubicGraph, GraphError};

pub use adjacency::{parse_adjacency, parse_adjacency_multigraph, write_adjacency};
pub use graph6::{parse_graph6, write_graph6};
pub use small::{are_isomorphic, connected_cubic_graphs};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("bad graph6 encoding: {0}")]
    BadEncoding(String),
    #[error("line {line}: {reason}")]
    BadLine { line: usize, reason: String },
    #[error("line {line}: loop edge")]
    LoopEdge { line: usize },
    #[error("graph6 cannot encode parallel edges")]
    HasParallelEdges,
    #[error("bad family parameter: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "family", content = "parameter", rename_all = "snake_case")]
pub enum FamilySpec {
    Petersen,
    Flower(usize),
    Goldberg(usize),
    Permutation(Vec<usize>),
}

pub fn generate(spec: &FamilySpec) -> Result<CubicGraph, FormatError> {
    match spec {
        FamilySpec::Petersen => Ok(petersen()),
        FamilySpec::Flower(k) => flower(*k),
        FamilySpec::Goldberg(k) => goldberg(*k),
        FamilySpec::Permutation(p) => permutation(p),
    }
}

fn check_odd_index(name: &str, k: usize) -> Result<(), FormatError> {
    if k < 5 || k.is_multiple_of(2) {
        return Err(FormatError::BadParameter(format!("{name} index must be odd and at least 5, got {k}")));
    }
    Ok(())
}

/// The Petersen graph with the documented labelling.
pub fn petersen() -> CubicGraph {
    let mut e = Vec::with_capacity(15);
    e.extend((0..5).map(|i| (i, (i + 1) % 5)));
    e.extend((0..5).map(|i| (i, i + 5)));
    e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    CubicGraph::new(10, &e).expect("Petersen graph is cubic")
}

pub fn flower(k: usize) -> Result<CubicGraph, FormatError> {
    check_odd_index("flower", k)?;
    let (a, b, c, d) = (|i| i, |i| k + i, |i| 2 * k + i, |i| 3 * k + i);
    let mut e = Vec::with_capacity(6 * k);
    for i in 0..k {
        e.push((a(i), b(i)));
        e.push((a(i), c(i)));
        e.push((a(i), d(i)));
        e.push((b(i), b((i + 1) % k)));
    }
    for i in 0..k - 1 {
        e.push((c(i), c(i + 1)));
        e.push((d(i), d(i + 1)));
    }
    e.push((c(k - 1), d(0)));
    e.push((d(k - 1), c(0)));
    Ok(CubicGraph::new(4 * k, &e)?)
}

pub fn goldberg(k: usize) -> Result<CubicGraph, FormatError> {
    check_odd_index("goldberg", k)?;
    // Petersen vertices 2,3,5,6,7,8,9 -> local 0..7, hub local 7.
    let local = |p: usize| [usize::MAX, usize::MAX, 0, 1, usize::MAX, 2, 3, 4, 5, 6][p];
    let inner: [(usize, usize); 8] = [(2, 3), (2, 7), (3, 8), (5, 7), (6, 8), (7, 9), (8, 5), (9, 6)];
    let v = |block: usize, p: usize| 8 * (block % k) + local(p);
    let hub = |block: usize| 8 * (block % k) + 7;
    let mut e = Vec::with_capacity(12 * k);
    for i in 0..k {
        e.extend(inner.iter().map(|&(x, y)| (v(i, x), v(i, y))));
        e.push((hub(i), v(i, 5)));
        e.push((hub(i), hub(i + 1)));
        e.push((v(i, 3), v(i + 1, 2)));
        e.push((v(i, 9), v(i + 1, 6)));
    }
    Ok(CubicGraph::new(8 * k, &e)?)
}

pub fn permutation(perm: &[usize]) -> Result<CubicGraph, FormatError> {
    let k = perm.len();
    if k < 3 || k.is_multiple_of(2) {
        return Err(FormatError::BadParameter(format!("permutation length must be odd and at least 3, got {k}")));
    }
    let mut seen = vec![false; k];
    for &p in perm {
        if p >= k || std::mem::replace(&mut seen[p], true) {
            return Err(FormatError::BadParameter("not a permutation".into()));
        }
    }
    let mut e = Vec::with_capacity(3 * k);
    e.extend((0..k).map(|i| (i, (i + 1) % k)));
    e.extend((0..k).map(|i| (k + i, k + (i + 1) % k)));
    e.extend((0..k).map(|i| (i, k + perm[i])));
    Ok(CubicGraph::new(2 * k, &e)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{cyclic_connectivity_at_least, girth, is_bridgeless};

    #[test]
    fn petersen_parameters() {
        let p = petersen();
        assert_eq!((p.n(), p.m()), (10, 15));
        assert_eq!(girth(&p), Some(5));
        assert!(cyclic_connectivity_at_least(&p, 4).unwrap());
    }

    #[test]
    fn flower_sizes() {
        for k in [5, 7, 9] {
            let g = flower(k).unwrap();
            assert_eq!((g.n(), g.m()), (4 * k, 6 * k));
            assert!(is_bridgeless(&g));
        }
        assert!(matches!(flower(4), Err(FormatError::BadParameter(_))));
        assert!(matches!(flower(3), Err(FormatError::BadParameter(_))));
    }

    #[test]
    fn goldberg_sizes_and_girth() {
        let g = goldberg(5).unwrap();
        assert_eq!((g.n(), g.m()), (40, 60));
        assert_eq!(girth(&g), Some(5));
        assert!(cyclic_connectivity_at_least(&g, 4).unwrap());
    }

    #[test]
    fn identity_permutation_is_the_prism() {
        let g = permutation(&[0, 1, 2, 3, 4]).unwrap();
        assert_eq!((g.n(), girth(&g)), (10, Some(4)));
    }

    #[test]
    fn pentagram_permutation_is_petersen() {
        let g = permutation(&[0, 2, 4, 1, 3]).unwrap();
        assert!(are_isomorphic(&g, &petersen()));
    }

    #[test]
    fn bad_permutation() {
        assert!(permutation(&[0, 0, 1]).is_err());
        assert!(permutation(&[0, 1, 2, 3]).is_err());
    }
}
