use super::{reference, PetersenColouring, PetersenError};
use crate::graph::{CubicGraph, EdgeId, Multigraph, VertexId};

fn find_edge(g: &Multigraph, u: VertexId, v: VertexId, taken: &[bool]) -> Option<EdgeId> {
    (0..g.m()).find(|&e| {
        let [a, b] = g.ends(e);
        !taken[e] && ((a, b) == (u, v) || (a, b) == (v, u))
    })
}

/// Reads lines `u v -> p q`, one per edge of `g`. Blank lines and lines
/// starting with `#` are skipped. Parallel edges are matched in id order.
pub fn parse_colouring(g: &CubicGraph, text: &str) -> Result<PetersenColouring, PetersenError> {
    let p = reference();
    let mut image = vec![None; g.m()];
    let mut taken = vec![false; g.m()];
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |reason: &str| PetersenError::Parse { line: i + 1, reason: reason.to_string() };
        let (lhs, rhs) = line.split_once("->").ok_or_else(|| err("expected `u v -> p q`"))?;
        let pair = |s: &str| -> Option<(usize, usize)> {
            let mut it = s.split_whitespace().map(str::parse::<usize>);
            match (it.next(), it.next(), it.next()) {
                (Some(Ok(a)), Some(Ok(b)), None) => Some((a, b)),
                _ => None,
            }
        };
        let (u, v) = pair(lhs).ok_or_else(|| err("left side needs two vertex numbers"))?;
        let (a, b) = pair(rhs).ok_or_else(|| err("right side needs two vertex numbers"))?;
        let e = find_edge(g, u, v, &taken).ok_or_else(|| err("no unassigned edge with these ends in the graph"))?;
        let pe = find_edge(p, a, b, &[false; 15]).ok_or_else(|| err("not an edge of the reference Petersen graph"))?;
        taken[e] = true;
        image[e] = Some(pe);
    }
    let got = image.iter().filter(|x| x.is_some()).count();
    if got != g.m() {
        return Err(PetersenError::PartialAssignment { expected: g.m(), got });
    }
    Ok(PetersenColouring::new(image.into_iter().map(Option::unwrap).collect()))
}

pub fn write_colouring(g: &CubicGraph, c: &PetersenColouring) -> String {
    let p = reference();
    let mut out = String::new();
    for (e, &pe) in c.assignment.iter().enumerate() {
        let [u, v] = g.ends(e);
        let [a, b] = p.ends(pe);
        out.push_str(&format!("{u} {v} -> {a} {b}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::petersen;

    #[test]
    fn round_trip() {
        let g = petersen();
        let id = PetersenColouring::new((0..15).rev().collect());
        let text = write_colouring(&g, &id);
        assert!(text.starts_with("0 1 -> 9 6\n"));
        assert_eq!(parse_colouring(&g, &text).unwrap(), id);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let g = petersen();
        let e = parse_colouring(&g, "# header\n0 1 -> 0 2\n").unwrap_err();
        assert!(matches!(e, PetersenError::Parse { line: 2, .. }));
        let e = parse_colouring(&g, "0 1 -> 0 1\n").unwrap_err();
        assert_eq!(e, PetersenError::PartialAssignment { expected: 15, got: 1 });
        let e = parse_colouring(&g, "0 1 0 1\n").unwrap_err();
        assert!(matches!(e, PetersenError::Parse { line: 1, .. }));
    }
}
