use std::cmp::Ordering;

use serde::Serialize;

use super::{EdgeId, EdgeSet, GraphError, Multigraph, VertexId};

/// A connected 2-regular edge set, stored as a cyclic edge sequence.
///
/// Circuits are always kept in canonical form: the edge sequence is the
/// lexicographically least among its rotations and reflections, so equal
/// circuits compare equal and sort deterministically (by length first).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Circuit {
    edges: Vec<EdgeId>,
    vertices: Vec<VertexId>,
    #[serde(skip)]
    set: EdgeSet,
}

impl Circuit {
    /// Builds a circuit from edges listed in cyclic order (either direction,
    /// any rotation).
    pub fn from_edges(g: &Multigraph, edges: &[EdgeId]) -> Result<Circuit, GraphError> {
        let bad = |reason: &str| GraphError::NotACircuit { reason: reason.to_string() };
        if edges.len() < 2 {
            return Err(bad("fewer than two edges"));
        }
        for &e in edges {
            g.check_edge(e)?;
            if g.is_loop(e) {
                return Err(bad("contains a loop"));
            }
        }
        let set: EdgeSet = edges.iter().copied().collect();
        if set.len() != edges.len() {
            return Err(bad("repeated edge"));
        }
        if walk(g, edges, g.ends(edges[0])[0]).is_none() && walk(g, edges, g.ends(edges[0])[1]).is_none() {
            return Err(bad("edges do not close up into a simple cycle"));
        }
        Ok(Self::canonical(g, edges.to_vec(), set))
    }

    /// Builds a circuit from an unordered edge set.
    pub fn from_edge_set(g: &Multigraph, set: EdgeSet) -> Result<Circuit, GraphError> {
        let bad = |reason: &str| GraphError::NotACircuit { reason: reason.to_string() };
        let first = set.first().ok_or_else(|| bad("empty edge set"))?;
        for e in set {
            g.check_edge(e)?;
            if g.is_loop(e) {
                return Err(bad("contains a loop"));
            }
        }
        let mut seq = vec![first];
        let start = g.ends(first)[0];
        let mut cur = g.ends(first)[1];
        let mut prev = first;
        while cur != start {
            let mut next = None;
            for e in g.edges_at(cur) {
                if set.contains(e) && e != prev {
                    if next.is_some() {
                        return Err(bad("vertex of degree above 2"));
                    }
                    next = Some(e);
                }
            }
            let e = next.ok_or_else(|| bad("walk ends at a vertex of degree 1"))?;
            seq.push(e);
            if seq.len() > set.len() {
                return Err(bad("walk does not close"));
            }
            prev = e;
            cur = g.other_end(e, cur);
        }
        if seq.len() != set.len() {
            return Err(bad("edge set is not connected"));
        }
        Self::from_edges(g, &seq)
    }

    fn canonical(g: &Multigraph, mut edges: Vec<EdgeId>, set: EdgeSet) -> Circuit {
        let l = edges.len();
        let pos = (0..l).min_by_key(|&i| edges[i]).unwrap();
        edges.rotate_left(pos);
        if l > 2 && edges[l - 1] < edges[1] {
            edges[1..].reverse();
        }
        let vertices = if l == 2 {
            let [a, b] = g.ends(edges[0]);
            vec![a.min(b), a.max(b)]
        } else {
            let [a, b] = g.ends(edges[0]);
            let start = if g.ends(edges[1]).contains(&b) && !g.ends(edges[1]).contains(&a) { a } else { b };
            walk(g, &edges, start).expect("validated circuit")
        };
        Circuit { edges, vertices, set }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    /// Circuits are never empty; provided for API symmetry.
    #[inline]
    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    #[inline]
    pub fn edges(&self) -> &[EdgeId] {
        &self.edges
    }

    /// Vertex sequence; `vertices[i]` is where `edges[i]` starts.
    #[inline]
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    #[inline]
    pub fn edge_set(&self) -> EdgeSet {
        self.set
    }

    #[inline]
    pub fn contains(&self, e: EdgeId) -> bool {
        self.set.contains(e)
    }
}

/// Walks `edges` from `start`; returns the visited vertex sequence when the
/// walk is a closed simple cycle.
fn walk(g: &Multigraph, edges: &[EdgeId], start: VertexId) -> Option<Vec<VertexId>> {
    let mut seen = std::collections::HashSet::new();
    let mut verts = Vec::with_capacity(edges.len());
    let mut cur = start;
    for &e in edges {
        if !g.ends(e).contains(&cur) || !seen.insert(cur) {
            return None;
        }
        verts.push(cur);
        cur = g.other_end(e, cur);
    }
    (cur == start).then_some(verts)
}

impl Ord for Circuit {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.edges.cmp(&other.edges))
    }
}

impl PartialOrd for Circuit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// An edge set meeting every vertex an even number of times.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct EvenSubgraph(EdgeSet);

impl EvenSubgraph {
    pub fn new(g: &Multigraph, set: EdgeSet) -> Result<Self, GraphError> {
        if let Some(e) = set.iter().find(|&e| e >= g.m()) {
            return Err(GraphError::EdgeOutOfRange { edge: e, m: g.m() });
        }
        for v in 0..g.n() {
            let d = g.degree_in(v, set);
            if d % 2 == 1 {
                return Err(GraphError::NotEven { vertex: v, degree: d });
            }
        }
        Ok(EvenSubgraph(set))
    }

    pub fn from_circuits<'a>(circuits: impl IntoIterator<Item = &'a Circuit>) -> Self {
        EvenSubgraph(circuits.into_iter().fold(EdgeSet::EMPTY, |acc, c| acc ^ c.edge_set()))
    }

    #[inline]
    pub fn edge_set(self) -> EdgeSet {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0.is_empty()
    }

    /// Vertices met by the subgraph.
    pub fn vertices(self, g: &Multigraph) -> Vec<VertexId> {
        (0..g.n()).filter(|&v| g.degree_in(v, self.0) > 0).collect()
    }

    /// True when every vertex meets the subgraph in exactly two edges.
    pub fn is_two_factor(self, g: &Multigraph) -> bool {
        (0..g.n()).all(|v| g.degree_in(v, self.0) == 2)
    }

    /// Splits the subgraph into edge-disjoint circuits, greedily following the
    /// smallest available edge. For subgraphs of cubic graphs the
    /// decomposition is unique. The result is sorted.
    pub fn circuits(self, g: &Multigraph) -> Result<Vec<Circuit>, GraphError> {
        let mut rest = self.0;
        let mut out = Vec::new();
        while let Some(e0) = rest.first() {
            if g.is_loop(e0) {
                return Err(GraphError::NotACircuit { reason: "loop in even subgraph".into() });
            }
            // Walk until a vertex repeats, then peel off the closed part.
            let mut trail_v = vec![g.ends(e0)[0]];
            let mut trail_e = vec![e0];
            let mut used = EdgeSet::single(e0);
            let mut cur = g.ends(e0)[1];
            loop {
                if let Some(i) = trail_v.iter().position(|&v| v == cur) {
                    let cyc: Vec<EdgeId> = trail_e[i..].to_vec();
                    let c = Circuit::from_edges(g, &cyc)?;
                    rest = rest - c.edge_set();
                    out.push(c);
                    break;
                }
                let next = g
                    .edges_at(cur)
                    .filter(|&e| rest.contains(e) && !used.contains(e) && !g.is_loop(e))
                    .min()
                    .ok_or(GraphError::NotEven { vertex: cur, degree: g.degree_in(cur, rest) })?;
                trail_v.push(cur);
                trail_e.push(next);
                used.insert(next);
                cur = g.other_end(next, cur);
            }
        }
        out.sort();
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{k4, prism};

    #[test]
    fn canonical_rotation_and_reflection() {
        let g = k4();
        // triangle 0-1-2 uses edges (0,1)=0, (1,2)=3, (0,2)=1
        let a = Circuit::from_edges(&g, &[3, 1, 0]).unwrap();
        let b = Circuit::from_edges(&g, &[0, 3, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edges(), &[0, 1, 3]);
        assert_eq!(a.vertices().len(), 3);
    }

    #[test]
    fn rejects_open_path() {
        let g = k4();
        assert!(Circuit::from_edges(&g, &[0, 3]).is_err());
        assert!(Circuit::from_edge_set(&g, [0, 3].into_iter().collect()).is_err());
    }

    #[test]
    fn digon_in_multigraph() {
        let g = Multigraph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        let c = Circuit::from_edges(&g, &[2, 0]).unwrap();
        assert_eq!(c.edges(), &[0, 2]);
        assert_eq!(c.vertices(), &[0, 1]);
    }

    #[test]
    fn even_subgraph_decomposes_into_its_cycles() {
        let g = prism();
        let two_triangles: EdgeSet = [0, 1, 2, 3, 4, 5].into_iter().collect();
        let ev = EvenSubgraph::new(&g, two_triangles).unwrap();
        assert!(ev.is_two_factor(&g));
        let cs = ev.circuits(&g).unwrap();
        assert_eq!(cs.len(), 2);
        assert_eq!(EvenSubgraph::from_circuits(&cs), ev);
    }

    #[test]
    fn odd_set_rejected() {
        let g = prism();
        assert!(EvenSubgraph::new(&g, EdgeSet::single(0)).is_err());
    }
}
