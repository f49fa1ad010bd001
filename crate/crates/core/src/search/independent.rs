use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::subgraph::{contains_subgraph, Budget, Embedding, Matcher, Meter};
use crate::vertex_set::{popcount, VertexSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Optimality {
    /// The search finished: no larger set exists.
    Optimal,
    /// The budget ran out; the set is valid but maybe not maximum.
    LowerBound,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetSearch {
    pub set: VertexSet,
    pub status: Optimality,
    pub nodes: u64,
}

impl SetSearch {
    pub fn size(&self) -> usize {
        self.set.len()
    }

    pub fn is_optimal(&self) -> bool {
        self.status == Optimality::Optimal
    }
}

/// Repeatedly takes a minimum-degree vertex and deletes its closed
/// neighbourhood. Always reaches `⌈n / (Δ + 1)⌉`.
pub fn greedy_independent_set(g: &Graph) -> VertexSet {
    let n = g.n();
    let mut alive = VertexSet::full(n);
    let mut out = VertexSet::new(n);
    while !alive.is_empty() {
        let v = alive.iter().min_by_key(|&v| (popcount_and(g.row(v), alive.words()), v)).expect("non-empty");
        out.insert(v);
        alive.remove(v);
        for u in g.neighbors(v) {
            alive.remove(u);
        }
    }
    out
}

fn first_bit(w: &[u64]) -> Option<usize> {
    w.iter().position(|&x| x != 0).map(|i| i * 64 + w[i].trailing_zeros() as usize)
}

fn popcount_and(a: &[u64], b: &[u64]) -> usize {
    a.iter().zip(b).map(|(x, y)| (x & y).count_ones() as usize).sum()
}

/// Maximum independent set by branch and bound (maximum clique of the
/// complement with greedy colouring bounds), seeded with the greedy set.
pub fn max_independent_set(g: &Graph, budget: Budget) -> SetSearch {
    let n = g.n();
    // clique search over the complement; vertices relabelled by increasing degree
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let stride = n.div_ceil(64);
    let mut comp = vec![0u64; n * stride];
    for i in 0..n {
        for j in 0..n {
            if i != j && !g.has_edge(order[i], order[j]) {
                comp[i * stride + j / 64] |= 1 << (j % 64);
            }
        }
    }
    let greedy = greedy_independent_set(g);
    let mut search = CliqueSearch {
        stride,
        comp: &comp,
        best: greedy.iter().map(|v| pos[v]).collect(),
        current: Vec::new(),
        meter: budget.meter(),
    };
    let all = VertexSet::full(n).words().to_vec();
    search.expand(all);
    let status = if search.meter.exhausted() { Optimality::LowerBound } else { Optimality::Optimal };
    let set = VertexSet::from_vertices(n, search.best.iter().map(|&i| order[i])).expect("in range");
    assert!(g.is_independent(&set), "independent set search returned a dependent set");
    SetSearch { set, status, nodes: search.meter.used() }
}

struct CliqueSearch<'a> {
    stride: usize,
    comp: &'a [u64],
    best: Vec<usize>,
    current: Vec<usize>,
    meter: Meter,
}

impl CliqueSearch<'_> {
    fn row(&self, v: usize) -> &[u64] {
        &self.comp[v * self.stride..(v + 1) * self.stride]
    }

    fn expand(&mut self, mut cand: Vec<u64>) {
        if !self.meter.tick() {
            return;
        }
        // greedy colouring: each class is pairwise non-adjacent in the complement
        let mut uncolored = cand.clone();
        let mut seq = Vec::with_capacity(popcount(&cand));
        let mut color = 0;
        while uncolored.iter().any(|&w| w != 0) {
            color += 1;
            let mut q = uncolored.clone();
            while let Some(v) = first_bit(&q) {
                uncolored[v / 64] &= !(1 << (v % 64));
                q[v / 64] &= !(1 << (v % 64));
                for (qw, rw) in q.iter_mut().zip(self.row(v)) {
                    *qw &= !rw;
                }
                seq.push((v, color));
            }
        }
        for &(v, c) in seq.iter().rev() {
            if self.current.len() + c <= self.best.len() {
                return;
            }
            self.current.push(v);
            let next: Vec<u64> = cand.iter().zip(self.row(v)).map(|(a, b)| a & b).collect();
            if next.iter().all(|&w| w == 0) {
                if self.current.len() > self.best.len() {
                    self.best = self.current.clone();
                }
            } else {
                self.expand(next);
            }
            self.current.pop();
            cand[v / 64] &= !(1 << (v % 64));
            if self.meter.exhausted() {
                return;
            }
        }
    }
}

/// Largest vertex set whose induced subgraph has no (not necessarily
/// induced) copy of `pattern`.
pub fn max_f_free_subset(g: &Graph, pattern: &Graph, budget: Budget) -> Result<SetSearch> {
    if pattern.edge_count() == 0 {
        return Err(Error::invalid("pattern F must have at least one edge"));
    }
    let n = g.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    let mut s =
        FreeSearch { g, pattern, order, chosen: VertexSet::new(n), best: VertexSet::new(n), meter: budget.meter() };
    let cand: Vec<usize> = s.order.clone();
    s.branch(&cand);
    let status = if s.meter.exhausted() { Optimality::LowerBound } else { Optimality::Optimal };
    let set = s.best;
    let induced = g.induced_subgraph(&set)?;
    if set.len() >= pattern.n() && contains_subgraph(&induced, pattern, Budget::UNLIMITED)? != Embedding::Absent {
        return Err(Error::ValidationFault("F-free subset search returned a set containing F".into()));
    }
    Ok(SetSearch { set, status, nodes: s.meter.used() })
}

struct FreeSearch<'a> {
    g: &'a Graph,
    pattern: &'a Graph,
    order: Vec<usize>,
    chosen: VertexSet,
    best: VertexSet,
    meter: Meter,
}

impl FreeSearch<'_> {
    /// Would adding `v` create a copy of the pattern?
    fn blocked(&mut self, v: usize) -> bool {
        let mut allowed = self.chosen.clone();
        allowed.insert(v);
        if allowed.len() < self.pattern.n() {
            return false;
        }
        let m = Matcher::new(self.g, self.pattern, Some(&allowed));
        // an unfinished check counts as blocked; the caller's budget is spent anyway
        !m.search(Some(v), &mut self.meter).is_absent()
    }

    fn branch(&mut self, cand: &[usize]) {
        if !self.meter.tick() {
            return;
        }
        if self.chosen.len() + cand.len() <= self.best.len() {
            return;
        }
        let Some((&v, rest)) = cand.split_first() else {
            if self.chosen.len() > self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        };
        if !self.blocked(v) {
            self.chosen.insert(v);
            self.branch(rest);
            self.chosen.remove(v);
            if self.meter.exhausted() {
                return;
            }
        }
        self.branch(rest);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn turan_floor(g: &Graph) -> usize {
        g.n().div_ceil(g.max_degree() + 1)
    }

    #[test]
    fn independent_set_examples() {
        let r = max_independent_set(&cycle(5), Budget::UNLIMITED);
        assert_eq!((r.size(), r.status), (2, Optimality::Optimal));
        let r = max_independent_set(&petersen(), Budget::UNLIMITED);
        assert_eq!((r.size(), r.status), (4, Optimality::Optimal));
        let r = max_independent_set(&complete(7), Budget::UNLIMITED);
        assert_eq!((r.size(), r.status), (1, Optimality::Optimal));
        assert_eq!(max_independent_set(&Graph::new(0), Budget::UNLIMITED).size(), 0);
        assert_eq!(max_independent_set(&Graph::new(70), Budget::UNLIMITED).size(), 70);
    }

    #[test]
    fn lower_bound_keeps_turan_floor() {
        use rand::Rng;
        let mut rng = crate::rng::SeededRng::new(3, "gnp");
        let mut g = Graph::new(120);
        for u in 0..120 {
            for v in u + 1..120 {
                if rng.gen_bool(0.3) {
                    g.add_edge(u, v);
                }
            }
        }
        let r = max_independent_set(&g, Budget::nodes(1));
        assert_eq!(r.status, Optimality::LowerBound);
        assert!(r.size() >= turan_floor(&g));
        assert!(g.is_independent(&r.set));
    }

    #[test]
    fn f_free_examples() {
        let r = max_f_free_subset(&cycle(5), &path(3), Budget::UNLIMITED).unwrap();
        assert_eq!((r.size(), r.status), (3, Optimality::Optimal));
        let r = max_f_free_subset(&complete(4), &complete(2), Budget::UNLIMITED).unwrap();
        assert_eq!(r.size(), 1);
        assert!(max_f_free_subset(&cycle(5), &Graph::new(2), Budget::UNLIMITED).is_err());
        let r = max_f_free_subset(&petersen(), &complete(2), Budget::UNLIMITED).unwrap();
        assert_eq!(r.size(), 4);
        // C4-free subsets of K_{3,3}: a star K_{1,3} has 4 vertices and no C4
        let r = max_f_free_subset(&complete_bipartite(3, 3), &cycle(4), Budget::UNLIMITED).unwrap();
        assert_eq!(r.size(), 4);
    }
}
