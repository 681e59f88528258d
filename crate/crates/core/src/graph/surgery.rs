use serde::Serialize;

use super::{
    bridges, Circuit, CubicGraph, CycleCover, EdgeId, EdgeSet, EvenSubgraph, GraphError, KCdc, Multigraph, VertexId,
};

/// Correspondence between a suppressed graph and the graph it came from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReductionMap {
    /// For each reduced edge, the original edges it stands for, ordered from
    /// the reduced edge's first endpoint to its second.
    pub edge_path: Vec<Vec<EdgeId>>,
    /// Original vertices smoothed away.
    pub suppressed_vertices: Vec<VertexId>,
    /// For each reduced vertex, the original vertex it is.
    pub vertex_origin: Vec<VertexId>,
    /// Edge count of the original graph.
    pub original_edges: usize,
}

impl ReductionMap {
    pub fn identity(g: &Multigraph) -> Self {
        ReductionMap {
            edge_path: (0..g.m()).map(|e| vec![e]).collect(),
            suppressed_vertices: Vec::new(),
            vertex_origin: (0..g.n()).collect(),
            original_edges: g.m(),
        }
    }

    /// Rewrites original edge ids through `origin`, for maps computed on a
    /// subgraph whose edge `i` is edge `origin[i]` of an ancestor graph.
    pub fn relabel_edges(mut self, origin: &[EdgeId], ancestor_edges: usize) -> Self {
        for path in &mut self.edge_path {
            for e in path.iter_mut() {
                *e = origin[*e];
            }
        }
        self.original_edges = ancestor_edges;
        self
    }

    /// Original edges used by some reduced edge.
    pub fn covered_edges(&self) -> EdgeSet {
        self.edge_path.iter().flatten().copied().collect()
    }

    /// Suppressed original vertices inside a reduced edge, in path order.
    pub fn interior_vertices(&self, original: &Multigraph, reduced_edge: EdgeId) -> Vec<VertexId> {
        let path = &self.edge_path[reduced_edge];
        path.windows(2)
            .map(|w| {
                let [a, b] = original.ends(w[0]);
                if original.ends(w[1]).contains(&a) {
                    a
                } else {
                    b
                }
            })
            .collect()
    }
}

/// Smooths every degree-2 vertex, replacing each maximal path through
/// degree-2 vertices by one edge.
pub fn suppress_degree_two(g: &Multigraph) -> Result<(CubicGraph, ReductionMap), GraphError> {
    let mut new_id = vec![usize::MAX; g.n()];
    let mut origin = Vec::new();
    let mut suppressed = Vec::new();
    for (v, id) in new_id.iter_mut().enumerate() {
        match g.degree(v) {
            3 => {
                *id = origin.len();
                origin.push(v);
            }
            2 => suppressed.push(v),
            d => return Err(GraphError::BadDegree { vertex: v, degree: d }),
        }
    }
    if origin.is_empty() {
        return Err(GraphError::AllDegreeTwo);
    }
    let mut consumed = EdgeSet::EMPTY;
    let mut edges = Vec::new();
    let mut paths = Vec::new();
    for &v in &origin {
        for &d in g.darts_at(v) {
            let e0 = Multigraph::dart_edge(d);
            if consumed.contains(e0) {
                continue;
            }
            let mut path = vec![e0];
            consumed.insert(e0);
            let mut prev = e0;
            let mut cur = g.other_end(e0, v);
            while g.degree(cur) == 2 {
                let next = g
                    .darts_at(cur)
                    .iter()
                    .map(|&d| Multigraph::dart_edge(d))
                    .find(|&e| e != prev)
                    .filter(|&e| !consumed.contains(e))
                    .ok_or(GraphError::LoopCreated { vertex: v })?;
                consumed.insert(next);
                path.push(next);
                prev = next;
                cur = g.other_end(next, cur);
            }
            if cur == v {
                return Err(GraphError::LoopCreated { vertex: v });
            }
            edges.push((new_id[v], new_id[cur]));
            paths.push(path);
        }
    }
    if consumed.len() != g.m() {
        // Some component is a bare cycle of degree-2 vertices.
        return Err(GraphError::AllDegreeTwo);
    }
    let reduced = CubicGraph::new(origin.len(), &edges)?;
    let map = ReductionMap {
        edge_path: paths,
        suppressed_vertices: suppressed,
        vertex_origin: origin,
        original_edges: g.m(),
    };
    Ok((reduced, map))
}

fn check_map(map: &ReductionMap, e: EdgeId) -> Result<(), GraphError> {
    if e < map.edge_path.len() {
        Ok(())
    } else {
        Err(GraphError::MapMismatch { reason: format!("edge {e} not in reduced graph") })
    }
}

fn lift_circuit(c: &Circuit, map: &ReductionMap, original: &Multigraph) -> Result<Circuit, GraphError> {
    let mut set = EdgeSet::EMPTY;
    for &e in c.edges() {
        check_map(map, e)?;
        set |= map.edge_path[e].iter().copied().collect();
    }
    Circuit::from_edge_set(original, set)
        .map_err(|_| GraphError::MapMismatch { reason: "lifted edges do not form a circuit".into() })
}

/// Replaces every reduced edge of every circuit by its original path.
pub fn lift_cover(cover: &CycleCover, map: &ReductionMap, original: &Multigraph) -> Result<CycleCover, GraphError> {
    if original.m() != map.original_edges {
        return Err(GraphError::MapMismatch { reason: "original graph size differs".into() });
    }
    let circuits = cover.circuits.iter().map(|c| lift_circuit(c, map, original)).collect::<Result<_, _>>()?;
    Ok(CycleCover::new(circuits))
}

/// Lifts an edge set of the reduced graph.
pub fn lift_even(set: EdgeSet, map: &ReductionMap) -> Result<EdgeSet, GraphError> {
    let mut out = EdgeSet::EMPTY;
    for e in set {
        check_map(map, e)?;
        out |= map.edge_path[e].iter().copied().collect();
    }
    Ok(out)
}

pub fn lift_kcdc(cdc: &KCdc, map: &ReductionMap) -> Result<KCdc, GraphError> {
    let classes = cdc.classes.iter().map(|&c| lift_even(c, map)).collect::<Result<_, _>>()?;
    Ok(KCdc::new(classes))
}

/// Result of contracting each circuit of a 2-factor to a vertex.
#[derive(Debug, Clone)]
pub struct Contraction {
    pub graph: Multigraph,
    /// Component index of each original vertex.
    pub vertex_map: Vec<usize>,
    /// Original id of each contracted edge.
    pub edge_origin: Vec<EdgeId>,
    /// The 2-factor's circuits, indexed like the contracted vertices.
    pub components: Vec<Circuit>,
    /// Contracted edges that became loops.
    pub loops: Vec<EdgeId>,
}

pub fn contract_two_factor(g: &CubicGraph, f: EvenSubgraph) -> Result<Contraction, GraphError> {
    if !f.is_two_factor(g) {
        let missing = (0..g.n()).find(|&v| g.degree_in(v, f.edge_set()) != 2).unwrap_or(0);
        return Err(GraphError::NotTwoFactor { reason: format!("vertex {missing} does not meet it twice") });
    }
    let components = f.circuits(g)?;
    let mut vertex_map = vec![0; g.n()];
    for (i, c) in components.iter().enumerate() {
        for &v in c.vertices() {
            vertex_map[v] = i;
        }
    }
    let edge_origin: Vec<EdgeId> = (0..g.m()).filter(|&e| !f.edge_set().contains(e)).collect();
    let edges: Vec<_> = edge_origin
        .iter()
        .map(|&e| {
            let [u, v] = g.ends(e);
            (vertex_map[u], vertex_map[v])
        })
        .collect();
    let graph = Multigraph::new(components.len(), &edges)?;
    let loops = graph.loops();
    Ok(Contraction { graph, vertex_map, edge_origin, components, loops })
}

/// Deletes `e1` from `g1` and `e2` from `g2` and reconnects the four freed
/// endpoints with two new edges. With `cross == false` the first endpoints are
/// joined together and the second endpoints together; otherwise the pairing
/// is swapped. Vertices of `g2` are shifted by `g1.n()`.
pub fn two_cut_join(
    g1: &CubicGraph,
    e1: EdgeId,
    g2: &CubicGraph,
    e2: EdgeId,
    cross: bool,
) -> Result<CubicGraph, GraphError> {
    g1.check_edge(e1)?;
    g2.check_edge(e2)?;
    if bridges(g1).contains(&e1) {
        return Err(GraphError::BridgeDeleted { edge: e1 });
    }
    if bridges(g2).contains(&e2) {
        return Err(GraphError::BridgeDeleted { edge: e2 });
    }
    let off = g1.n();
    let mut edges: Vec<_> = (0..g1.m()).filter(|&e| e != e1).map(|e| (g1.ends(e)[0], g1.ends(e)[1])).collect();
    edges.extend((0..g2.m()).filter(|&e| e != e2).map(|e| (g2.ends(e)[0] + off, g2.ends(e)[1] + off)));
    let [a, b] = g1.ends(e1);
    let [c, d] = g2.ends(e2);
    let (c, d) = if cross { (d + off, c + off) } else { (c + off, d + off) };
    edges.push((a, c));
    edges.push((b, d));
    CubicGraph::new(off + g2.n(), &edges)
}
