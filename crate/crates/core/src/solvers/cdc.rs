//! Cycle double covers under constraints.
//!
//! Without a class count the search works on circuits: the prescribed
//! circuits are taken first and the demand engine covers what is left. With
//! `k` classes every edge gets the pair of classes containing it; at a vertex
//! two edges must share exactly one class and the third edge gets the
//! symmetric difference, which drives propagation.

use std::collections::VecDeque;

use serde::Serialize;

use super::demand::demand_cover_within;
use super::{Budget, DemandOutcome, SolverError};
use crate::graph::{Circuit, CubicGraph, EdgeId, EdgeSet, KCdc, VertexId};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdcConstraints {
    /// Circuits that must appear in the cover (in class form: each must be
    /// a circuit of some class).
    pub must_contain: Vec<Circuit>,
    /// Number of classes; `None` asks for a plain circuit list.
    pub classes: Option<usize>,
    /// The last class must be a 2-factor (class form only).
    pub two_factor_class: bool,
    /// Reject covers with an empty class (class form only).
    pub nonempty_classes: bool,
    pub node_limit: u64,
}

impl Default for CdcConstraints {
    fn default() -> Self {
        CdcConstraints {
            must_contain: Vec::new(),
            classes: None,
            two_factor_class: false,
            nonempty_classes: false,
            node_limit: super::DEFAULT_NODE_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "cover", rename_all = "snake_case")]
pub enum CdcSolution {
    Circuits(Vec<Circuit>),
    Classes(KCdc),
    Infeasible,
}

pub fn find_cdc(g: &CubicGraph, c: &CdcConstraints) -> Result<CdcSolution, SolverError> {
    let mut budget = Budget::new(c.node_limit);
    match c.classes {
        None => {
            if c.two_factor_class || c.nonempty_classes {
                return Err(SolverError::BadConstraint("class options need a class count".into()));
            }
            circuit_form(g, &c.must_contain, &mut budget)
        }
        Some(k) => ClassSearch::run(g, k, c, &mut budget),
    }
}

fn circuit_form(g: &CubicGraph, must: &[Circuit], budget: &mut Budget) -> Result<CdcSolution, SolverError> {
    let mut demand = vec![2u8; g.m()];
    for c in must {
        for &e in c.edges() {
            if e >= g.m() {
                return Err(crate::graph::GraphError::EdgeOutOfRange { edge: e, m: g.m() }.into());
            }
            if demand[e] == 0 {
                return Ok(CdcSolution::Infeasible);
            }
            demand[e] -= 1;
        }
    }
    match demand_cover_within(g, &demand, budget)? {
        DemandOutcome::Infeasible => Ok(CdcSolution::Infeasible),
        DemandOutcome::Cover(mut cs) => {
            cs.extend(must.iter().cloned());
            cs.sort();
            Ok(CdcSolution::Circuits(cs))
        }
    }
}

struct ClassSearch<'a> {
    g: &'a CubicGraph,
    k: usize,
    /// Class pair of each edge as a bitmask, 0 when unassigned.
    pair: Vec<u32>,
    /// Classes each edge is required to lie in.
    required: Vec<u32>,
    order: Vec<EdgeId>,
    trail: Vec<EdgeId>,
    factor: Option<u32>,
    nonempty: bool,
}

impl<'a> ClassSearch<'a> {
    fn run(g: &'a CubicGraph, k: usize, c: &CdcConstraints, budget: &mut Budget) -> Result<CdcSolution, SolverError> {
        if !(2..=31).contains(&k) {
            return Err(SolverError::BadConstraint(format!("class count {k} must be between 2 and 31")));
        }
        let factor = c.two_factor_class.then_some(1u32 << (k - 1));
        // Labels 0.. are interchangeable, except a 2-factor class kept last.
        let free = if factor.is_some() { k - 1 } else { k };
        let mut order = Vec::with_capacity(g.m());
        let mut seen = vec![false; g.m()];
        let mut seen_v = vec![false; g.n()];
        for s in 0..g.n() {
            if std::mem::replace(&mut seen_v[s], true) {
                continue;
            }
            let mut q = VecDeque::from([s]);
            while let Some(v) = q.pop_front() {
                for e in g.edges_at(v) {
                    if !std::mem::replace(&mut seen[e], true) {
                        order.push(e);
                    }
                    let w = g.other_end(e, v);
                    if !std::mem::replace(&mut seen_v[w], true) {
                        q.push_back(w);
                    }
                }
            }
        }
        let mut st = ClassSearch {
            g,
            k,
            pair: vec![0; g.m()],
            required: vec![0; g.m()],
            order,
            trail: Vec::new(),
            factor,
            nonempty: c.nonempty_classes,
        };
        // Each prescribed circuit goes to a label already in use or to the
        // next fresh one; its edges are then required to carry that label.
        let found = st.place_must(&c.must_contain, 0, 0, free, budget)?;
        Ok(match found {
            Some(classes) => CdcSolution::Classes(KCdc::new(classes)),
            None => CdcSolution::Infeasible,
        })
    }

    fn place_must(
        &mut self,
        must: &[Circuit],
        i: usize,
        used: usize,
        free: usize,
        budget: &mut Budget,
    ) -> Result<Option<Vec<EdgeSet>>, SolverError> {
        let Some(c) = must.get(i) else { return self.branch(used, free, budget) };
        let mut labels: Vec<usize> = (0..(used + 1).min(free)).collect();
        if let Some(f) = self.factor {
            labels.push(f.trailing_zeros() as usize);
        }
        for label in labels {
            let bit = 1u32 << label;
            if c.edges()
                .iter()
                .any(|&e| e >= self.g.m() || self.required[e] & bit != 0 || (self.required[e] | bit).count_ones() > 2)
            {
                continue;
            }
            c.edges().iter().for_each(|&e| self.required[e] |= bit);
            let next_used = if label < free { used.max(label + 1) } else { used };
            let r = self.place_must(must, i + 1, next_used, free, budget)?;
            c.edges().iter().for_each(|&e| self.required[e] &= !bit);
            if r.is_some() {
                return Ok(r);
            }
        }
        Ok(None)
    }

    /// Applies an assignment and everything it forces. Returns false on a
    /// conflict; the trail records every assignment made either way.
    fn assign(&mut self, e: EdgeId, p: u32) -> bool {
        let mut queue = vec![(e, p)];
        while let Some((e, p)) = queue.pop() {
            if self.pair[e] != 0 {
                if self.pair[e] != p {
                    return false;
                }
                continue;
            }
            if p & self.required[e] != self.required[e] {
                return false;
            }
            self.pair[e] = p;
            self.trail.push(e);
            for v in self.g.ends(e) {
                if !self.vertex_ok(v, &mut queue) {
                    return false;
                }
            }
        }
        true
    }

    fn vertex_ok(&self, v: VertexId, queue: &mut Vec<(EdgeId, u32)>) -> bool {
        let es: Vec<EdgeId> = self.g.edges_at(v).collect();
        let known: Vec<EdgeId> = es.iter().copied().filter(|&e| self.pair[e] != 0).collect();
        match known.len() {
            2 => {
                let (a, b) = (self.pair[known[0]], self.pair[known[1]]);
                if (a & b).count_ones() != 1 {
                    return false;
                }
                let third = a ^ b;
                if self.factor.is_some_and(|f| (a | b) & f == 0) {
                    return false;
                }
                let c = *es.iter().find(|&&e| self.pair[e] == 0).expect("one edge left");
                queue.push((c, third));
                true
            }
            3 => {
                let (a, b, c) = (self.pair[es[0]], self.pair[es[1]], self.pair[es[2]]);
                a ^ b ^ c == 0 && (a & b).count_ones() == 1 && self.factor.is_none_or(|f| (a | b | c) & f != 0)
            }
            _ => true,
        }
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let e = self.trail.pop().expect("above mark");
            self.pair[e] = 0;
        }
    }

    fn branch(&mut self, used: usize, free: usize, budget: &mut Budget) -> Result<Option<Vec<EdgeSet>>, SolverError> {
        budget.tick()?;
        let Some(&e) = self.order.iter().find(|&&e| self.pair[e] == 0) else {
            let classes: Vec<EdgeSet> =
                (0..self.k).map(|i| (0..self.g.m()).filter(|&e| self.pair[e] >> i & 1 == 1).collect()).collect();
            if self.nonempty && classes.iter().any(|c| c.is_empty()) {
                return Ok(None);
            }
            return Ok(Some(classes));
        };
        // Unused free labels are interchangeable: a pair may open label
        // `used`, or `used` and `used + 1` together, but no later one.
        let mut pairs = Vec::new();
        for j in 0..self.k {
            for i in 0..j {
                let opens = |x: usize| x < free && x >= used;
                let ok_i = !opens(i) || i == used;
                let ok_j = !opens(j) || j == used || (j == used + 1 && i == used);
                if ok_i && ok_j {
                    pairs.push((i, j));
                }
            }
        }
        for (i, j) in pairs {
            let p = 1u32 << i | 1u32 << j;
            let mark = self.trail.len();
            if self.assign(e, p) {
                let top = [i, j].into_iter().filter(|&x| x < free).map(|x| x + 1).max().unwrap_or(0);
                // forced assignments never introduce labels
                let r = self.branch(used.max(top), free, budget)?;
                if r.is_some() {
                    return Ok(r);
                }
            }
            self.undo(mark);
        }
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{flower, petersen};
    use crate::graph::tests::k4;
    use crate::solvers::circumference;

    fn classes(g: &CubicGraph, k: usize, two_factor_class: bool) -> CdcSolution {
        find_cdc(g, &CdcConstraints { classes: Some(k), two_factor_class, ..Default::default() }).unwrap()
    }

    #[test]
    fn k4_three_cdc() {
        let g = k4();
        let CdcSolution::Classes(cdc) = classes(&g, 3, false) else { panic!("K4 has a 3-CDC") };
        let r = cdc.validate(&g);
        assert!(r.valid && r.is_cdc);
        assert_eq!(cdc.classes.iter().map(|c| c.len()).collect::<Vec<_>>(), vec![4, 4, 4]);
    }

    #[test]
    fn k4_five_cdc_needs_empty_classes() {
        let g = k4();
        assert!(matches!(classes(&g, 5, true), CdcSolution::Classes(_)));
        let strict = CdcConstraints { classes: Some(5), nonempty_classes: true, ..Default::default() };
        assert_eq!(find_cdc(&g, &strict).unwrap(), CdcSolution::Infeasible);
    }

    #[test]
    fn petersen_strong_cdc_through_a_nine_circuit() {
        let g = petersen();
        let (_, c9) = circumference(&g).unwrap();
        let sol = find_cdc(&g, &CdcConstraints { must_contain: vec![c9.clone()], ..Default::default() }).unwrap();
        let CdcSolution::Circuits(cs) = sol else { panic!("strong CDC exists") };
        assert!(cs.contains(&c9));
        let w = crate::graph::CycleCover::new(cs).edge_weights(15);
        assert!(w.iter().all(|&x| x == 2));
    }

    #[test]
    fn petersen_has_no_five_cdc_with_a_two_factor_class() {
        assert_eq!(classes(&petersen(), 5, true), CdcSolution::Infeasible);
        assert!(matches!(classes(&petersen(), 5, false), CdcSolution::Classes(_)));
    }

    #[test]
    fn flower_five_has_one() {
        let g = flower(5).unwrap();
        let CdcSolution::Classes(cdc) = classes(&g, 5, true) else { panic!("tau(J5) = 4") };
        assert!(cdc.validate(&g).is_cdc);
        assert!(crate::graph::EvenSubgraph::new(&g, cdc.classes[4]).unwrap().is_two_factor(&g));
    }

    #[test]
    fn class_form_with_a_prescribed_circuit() {
        let g = petersen();
        let (_, c9) = circumference(&g).unwrap();
        let sol =
            find_cdc(&g, &CdcConstraints { must_contain: vec![c9.clone()], classes: Some(5), ..Default::default() })
                .unwrap();
        let CdcSolution::Classes(cdc) = sol else { panic!("expected classes") };
        assert!(cdc.classes.iter().any(|c| c9.edge_set().is_subset(*c)));
    }

    #[test]
    fn node_limit_is_distinct() {
        let c = CdcConstraints { classes: Some(5), two_factor_class: true, node_limit: 2, ..Default::default() };
        assert_eq!(find_cdc(&petersen(), &c).unwrap_err(), SolverError::NodeLimitExceeded { limit: 2 });
    }
}
