use crate::graph::{Circuit, EdgeId, Multigraph, VertexId};

/// Length of a longest circuit with a witness, or `None` for a forest.
///
/// Every circuit is searched from its smallest vertex `s`, so paths only use
/// vertices above `s`. A path is abandoned when the vertices it could still
/// reach cannot lift it above the best length found.
pub fn circumference(g: &Multigraph) -> Option<(usize, Circuit)> {
    let n = g.n();
    let mut st = State {
        g,
        best: 0,
        best_path: Vec::new(),
        on_path: vec![false; n],
        path: Vec::new(),
        mark: vec![0; n],
        stamp: 0,
        stack: Vec::new(),
    };
    for s in 0..n {
        if n - s <= st.best {
            break;
        }
        st.on_path[s] = true;
        st.walk(s, s);
        st.on_path[s] = false;
    }
    (st.best > 0).then(|| {
        let c = Circuit::from_edges(g, &st.best_path).expect("recorded a closed walk");
        (st.best, c)
    })
}

struct State<'a> {
    g: &'a Multigraph,
    best: usize,
    best_path: Vec<EdgeId>,
    on_path: Vec<bool>,
    path: Vec<EdgeId>,
    mark: Vec<u32>,
    stamp: u32,
    stack: Vec<VertexId>,
}

impl State<'_> {
    /// Vertices above `s`, off the path, reachable from `v` through such
    /// vertices.
    fn reachable(&mut self, s: VertexId, v: VertexId) -> usize {
        self.stamp += 1;
        let stamp = self.stamp;
        self.stack.clear();
        self.stack.push(v);
        let mut count = 0;
        while let Some(x) = self.stack.pop() {
            for e in self.g.edges_at(x) {
                let y = self.g.other_end(e, x);
                if y > s && !self.on_path[y] && self.mark[y] != stamp {
                    self.mark[y] = stamp;
                    count += 1;
                    self.stack.push(y);
                }
            }
        }
        count
    }

    fn walk(&mut self, s: VertexId, v: VertexId) {
        if self.best == self.g.n() {
            return;
        }
        if self.path.len() + self.reachable(s, v) < self.best {
            return;
        }
        let edges: Vec<EdgeId> = self.g.edges_at(v).filter(|&e| !self.g.is_loop(e)).collect();
        for e in edges {
            if self.path.last() == Some(&e) {
                continue;
            }
            let w = self.g.other_end(e, v);
            if w == s && !self.path.is_empty() {
                if self.path.len() + 1 > self.best {
                    self.best = self.path.len() + 1;
                    self.best_path = self.path.clone();
                    self.best_path.push(e);
                }
            } else if w > s && !self.on_path[w] {
                self.on_path[w] = true;
                self.path.push(e);
                self.walk(s, w);
                self.path.pop();
                self.on_path[w] = false;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{flower, petersen};
    use crate::graph::tests::k4;

    #[test]
    fn known_values() {
        assert_eq!(circumference(&k4()).unwrap().0, 4);
        let (c, w) = circumference(&petersen()).unwrap();
        assert_eq!((c, w.len()), (9, 9));
        let theta = Multigraph::new(2, &[(0, 1), (0, 1), (0, 1)]).unwrap();
        assert_eq!(circumference(&theta).unwrap().0, 2);
        let path = Multigraph::new(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(circumference(&path).is_none());
    }

    #[test]
    fn flower_five_is_not_hamiltonian() {
        let (c, w) = circumference(&flower(5).unwrap()).unwrap();
        assert_eq!(w.len(), c);
        assert!(c < 20);
    }
}
