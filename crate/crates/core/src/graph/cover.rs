use std::collections::BTreeMap;

use serde::Serialize;

use super::{Circuit, EdgeId, EdgeSet, Multigraph, VertexId};

/// A multiset of circuits; edge weights count how many circuits use an edge.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct CycleCover {
    pub circuits: Vec<Circuit>,
}

impl CycleCover {
    pub fn new(mut circuits: Vec<Circuit>) -> Self {
        circuits.sort();
        CycleCover { circuits }
    }

    pub fn length(&self) -> usize {
        self.circuits.iter().map(Circuit::len).sum()
    }

    pub fn edge_weights(&self, m: usize) -> Vec<u32> {
        let mut w = vec![0u32; m];
        for c in &self.circuits {
            for &e in c.edges() {
                if e < m {
                    w[e] += 1;
                }
            }
        }
        w
    }

    /// Sum of incident edge weights at every vertex.
    pub fn vertex_weights(&self, g: &Multigraph) -> Vec<u32> {
        let w = self.edge_weights(g.m());
        (0..g.n()).map(|v| g.edges_at(v).map(|e| w[e]).sum()).collect()
    }

    /// Edges of weight exactly one.
    pub fn weight_one_edges(&self, m: usize) -> EdgeSet {
        self.edge_weights(m).iter().enumerate().filter(|(_, &w)| w == 1).map(|(e, _)| e).collect()
    }

    pub fn validate(&self, g: &Multigraph) -> CoverReport {
        let mut failures = Vec::new();
        for (i, c) in self.circuits.iter().enumerate() {
            if let Some(&e) = c.edges().iter().find(|&&e| e >= g.m()) {
                failures.push(CoverFailure::EdgeOutOfRange { edge: e });
            } else if Circuit::from_edges(g, c.edges()).is_err() {
                failures.push(CoverFailure::NotACircuit { index: i });
            }
        }
        let weights = self.edge_weights(g.m());
        for (e, &w) in weights.iter().enumerate() {
            if w == 0 {
                failures.push(CoverFailure::MissingEdge { edge: e });
            }
        }
        CoverReport::build(failures, self.length(), &weights)
    }
}

/// A cycle double cover grouped into `k` even-subgraph classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KCdc {
    pub classes: Vec<EdgeSet>,
}

impl KCdc {
    pub fn new(classes: Vec<EdgeSet>) -> Self {
        KCdc { classes }
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn edge_weights(&self, m: usize) -> Vec<u32> {
        (0..m).map(|e| self.classes.iter().filter(|c| c.contains(e)).count() as u32).collect()
    }

    pub fn validate(&self, g: &Multigraph) -> CoverReport {
        let mut failures = Vec::new();
        for (i, class) in self.classes.iter().enumerate() {
            if let Some(e) = class.iter().find(|&e| e >= g.m()) {
                failures.push(CoverFailure::EdgeOutOfRange { edge: e });
                continue;
            }
            for v in 0..g.n() {
                if g.degree_in(v, *class) % 2 == 1 {
                    failures.push(CoverFailure::OddVertex { class: i, vertex: v });
                }
            }
        }
        let weights = self.edge_weights(g.m());
        for (e, &w) in weights.iter().enumerate() {
            if w == 0 {
                failures.push(CoverFailure::MissingEdge { edge: e });
            } else if w != 2 {
                failures.push(CoverFailure::WrongMultiplicity { edge: e, count: w });
            }
        }
        let length = self.classes.iter().map(|c| c.len()).sum();
        CoverReport::build(failures, length, &weights)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CoverFailure {
    MissingEdge { edge: EdgeId },
    EdgeOutOfRange { edge: EdgeId },
    NotACircuit { index: usize },
    OddVertex { class: usize, vertex: VertexId },
    WrongMultiplicity { edge: EdgeId, count: u32 },
}

/// Outcome of validating a cover; failures are collected, never thrown.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub valid: bool,
    pub length: usize,
    pub weight_histogram: BTreeMap<u32, usize>,
    pub is_one_two_cover: bool,
    pub is_cdc: bool,
    pub failures: Vec<CoverFailure>,
}

impl CoverReport {
    fn build(failures: Vec<CoverFailure>, length: usize, weights: &[u32]) -> Self {
        let mut hist = BTreeMap::new();
        for &w in weights {
            *hist.entry(w).or_insert(0) += 1;
        }
        // Multiplicity complaints only disqualify k-CDCs, not plain covers.
        let structural = failures.iter().any(|f| !matches!(f, CoverFailure::WrongMultiplicity { .. }));
        let valid = failures.is_empty();
        CoverReport {
            valid,
            length,
            is_one_two_cover: !structural && weights.iter().all(|&w| w == 1 || w == 2),
            is_cdc: !structural && weights.iter().all(|&w| w == 2),
            weight_histogram: hist,
            failures,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::k4;

    fn four_cycles_of_k4() -> Vec<EdgeSet> {
        // K4 edges: 0:(0,1) 1:(0,2) 2:(0,3) 3:(1,2) 4:(1,3) 5:(2,3)
        vec![[0, 3, 5, 2].into_iter().collect(), [0, 4, 5, 1].into_iter().collect(), [1, 3, 4, 2].into_iter().collect()]
    }

    #[test]
    fn k4_colour_pairs_are_a_3cdc_of_length_12() {
        let g = k4();
        let cdc = KCdc::new(four_cycles_of_k4());
        let r = cdc.validate(&g);
        assert!(r.valid && r.is_cdc, "{r:?}");
        assert_eq!(r.length, 12);
    }

    #[test]
    fn missing_edge_is_reported() {
        let g = k4();
        let c = Circuit::from_edge_set(&g, four_cycles_of_k4()[0]).unwrap();
        let cover = CycleCover::new(vec![c]);
        let r = cover.validate(&g);
        assert!(!r.valid);
        assert!(r.failures.contains(&CoverFailure::MissingEdge { edge: 1 }));
        assert!(r.failures.contains(&CoverFailure::MissingEdge { edge: 4 }));
    }

    #[test]
    fn length_is_half_the_vertex_weight_sum() {
        let g = k4();
        let cs: Vec<_> =
            four_cycles_of_k4().into_iter().take(2).map(|s| Circuit::from_edge_set(&g, s).unwrap()).collect();
        let cover = CycleCover::new(cs);
        let r = cover.validate(&g);
        assert!(r.valid && r.is_one_two_cover && !r.is_cdc);
        let vw: u32 = cover.vertex_weights(&g).iter().sum();
        assert_eq!(cover.length() * 2, vw as usize);
        assert_eq!(cover.length(), 8);
    }
}
