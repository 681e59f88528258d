//! graph6 encoding of simple graphs: a size prefix followed by the upper
//! triangle of the adjacency matrix, column by column, six bits per byte,
//! each byte offset by 63.

use super::FormatError;
use crate::graph::CubicGraph;

const HEADER: &str = ">>graph6<<";

fn bad(msg: impl Into<String>) -> FormatError {
    FormatError::BadEncoding(msg.into())
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), FormatError> {
    let take = |k: usize, from: usize| -> Result<usize, FormatError> {
        let chunk = bytes.get(from..from + k).ok_or_else(|| bad("truncated size field"))?;
        Ok(chunk.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize))
    };
    match bytes {
        [] => Err(bad("empty line")),
        [126, 126, ..] => Ok((take(6, 2)?, 8)),
        [126, ..] => Ok((take(3, 1)?, 4)),
        [b, ..] => Ok(((b - 63) as usize, 1)),
    }
}

/// Parses one graph6 line (an optional `>>graph6<<` header is accepted).
pub fn parse_graph6(line: &str) -> Result<CubicGraph, FormatError> {
    let line = line.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(bad(format!("byte {b} outside 63..=126")));
    }
    let (n, skip) = decode_size(bytes)?;
    let body = &bytes[skip..];
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(bad(format!("expected {need} data bytes for n={n}, found {}", body.len())));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (bits..need * 6).any(bit) {
        return Err(bad("nonzero padding bits"));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(CubicGraph::new(n, &edges)?)
}

pub fn write_graph6(g: &CubicGraph) -> Result<String, FormatError> {
    if g.has_parallel_edges() {
        return Err(FormatError::HasParallelEdges);
    }
    let n = g.n();
    let mut adj = vec![false; n * n];
    for (u, v) in g.edge_list() {
        adj[u * n + v] = true;
        adj[v * n + u] = true;
    }
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let (mut acc, mut filled) = (0u8, 0);
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | adj[i * n + j] as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}
