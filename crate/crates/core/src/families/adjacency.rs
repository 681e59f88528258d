//! Plain edge-list format: one `u v` pair per line, `#` starts a comment.
//! Repeated lines give parallel edges.

use super::FormatError;
use crate::graph::{CubicGraph, Multigraph};

pub fn parse_adjacency_multigraph(text: &str) -> Result<Multigraph, FormatError> {
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let mut next = || -> Result<usize, FormatError> {
            let tok =
                parts.next().ok_or(FormatError::BadLine { line: line_no, reason: "expected two vertices".into() })?;
            tok.parse().map_err(|_| FormatError::BadLine { line: line_no, reason: format!("not a vertex id: {tok:?}") })
        };
        let (u, v) = (next()?, next()?);
        if parts.next().is_some() {
            return Err(FormatError::BadLine { line: line_no, reason: "trailing tokens".into() });
        }
        if u == v {
            return Err(FormatError::LoopEdge { line: line_no });
        }
        edges.push((u, v));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Ok(Multigraph::new(n, &edges)?)
}

pub fn parse_adjacency(text: &str) -> Result<CubicGraph, FormatError> {
    Ok(CubicGraph::try_from(parse_adjacency_multigraph(text)?)?)
}

/// Writes sorted `u v` lines with `u <= v`.
pub fn write_adjacency(g: &Multigraph) -> String {
    let mut pairs: Vec<_> = g.edge_list().into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    pairs.sort_unstable();
    pairs.iter().map(|(u, v)| format!("{u} {v}\n")).collect()
}
