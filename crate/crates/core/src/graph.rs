//! Simple undirected graphs with dense bit-row adjacency.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Witness};
use crate::vertex_set::{iter_bits, popcount, words_for, VertexSet};

/// A simple undirected graph on `[0, n)`.
///
/// Row `v` is a bit row over `[0, n)` holding the neighbours of `v`. The
/// matrix is kept symmetric with an empty diagonal by every mutator.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "GraphRepr", try_from = "GraphRepr")]
pub struct Graph {
    n: usize,
    stride: usize,
    rows: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl From<Graph> for GraphRepr {
    fn from(g: Graph) -> Self {
        GraphRepr { n: g.n, edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }
}

impl TryFrom<GraphRepr> for Graph {
    type Error = Error;
    fn try_from(r: GraphRepr) -> Result<Self> {
        Graph::from_edges(r.n, r.edges.into_iter().map(|[u, v]| (u, v)))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edges()).finish()
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        let stride = words_for(n);
        Graph { n, stride, rows: vec![0; n * stride] }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::invalid(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::invalid(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.stride..(v + 1) * self.stride]
    }

    #[inline]
    fn set_bit(&mut self, u: usize, v: usize, on: bool) {
        let w = &mut self.rows[u * self.stride + v / 64];
        if on {
            *w |= 1 << (v % 64);
        } else {
            *w &= !(1 << (v % 64));
        }
    }

    /// # Panics
    /// On a loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u}, {v})");
        self.set_bit(u, v, true);
        self.set_bit(v, u, true);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.set_bit(u, v, false);
            self.set_bit(v, u, false);
        }
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.rows[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        popcount(self.row(v))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        iter_bits(self.row(v))
    }

    pub fn neighborhood(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.n, self.row(v).to_vec())
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::new(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Subgraph induced on `s`, with members renumbered in increasing order.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<Graph> {
        if s.universe() > self.n {
            if let Some(v) = s.iter().find(|&v| v >= self.n) {
                return Err(Error::invalid(format!("vertex {v} out of range for n = {}", self.n)));
            }
        }
        let members = s.to_vec();
        Ok(self.induced_on(&members))
    }

    /// Subgraph induced on an explicit vertex list (in the given order).
    pub(crate) fn induced_on(&self, members: &[usize]) -> Graph {
        let mut g = Graph::new(members.len());
        for (i, &u) in members.iter().enumerate() {
            for (j, &v) in members.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Deletes vertex `v`, shifting higher indices down by one.
    pub fn remove_vertex(&self, v: usize) -> Graph {
        let keep: Vec<usize> = (0..self.n).filter(|&u| u != v).collect();
        self.induced_on(&keep)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.row(v).iter().zip(s.words()).all(|(a, b)| a & b == 0))
    }

    /// The blowup replacing each vertex by an independent set of `part`
    /// vertices; vertex `(v, i)` becomes `v * part + i`.
    pub fn blowup(&self, part: usize) -> Graph {
        let mut g = Graph::new(self.n * part);
        for (u, v) in self.edges() {
            for i in 0..part {
                for j in 0..part {
                    g.add_edge(u * part + i, v * part + j);
                }
            }
        }
        g
    }

    /// Some triangle `[a, b, c]` with `a < b < c`, lexicographically least.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for a in 0..self.n {
            for b in self.neighbors(a).filter(|&b| b > a) {
                let common: Vec<u64> = self.row(a).iter().zip(self.row(b)).map(|(x, y)| x & y).collect();
                let c = iter_bits(&common).find(|&c| c > b);
                if let Some(c) = c {
                    return Some([a, b, c]);
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// Some clique on `s` vertices, sorted.
    pub fn find_clique(&self, s: usize) -> Option<Vec<usize>> {
        if s == 0 {
            return Some(Vec::new());
        }
        let mut stack = Vec::with_capacity(s);
        let all = VertexSet::full(self.n);
        self.extend_clique(all.words().to_vec(), s, &mut stack).then_some(stack)
    }

    fn extend_clique(&self, cand: Vec<u64>, need: usize, stack: &mut Vec<usize>) -> bool {
        if need == 0 {
            return true;
        }
        if popcount(&cand) < need {
            return false;
        }
        for v in iter_bits(&cand).collect::<Vec<_>>() {
            // only later vertices, so every clique is visited once in sorted order
            let next: Vec<u64> = self
                .row(v)
                .iter()
                .zip(&cand)
                .enumerate()
                .map(|(i, (r, c))| {
                    let higher = if i * 64 > v {
                        u64::MAX
                    } else if (i + 1) * 64 <= v + 1 {
                        0
                    } else {
                        !((2u64 << (v % 64)) - 1)
                    };
                    r & c & higher
                })
                .collect();
            stack.push(v);
            if self.extend_clique(next, need - 1, stack) {
                return true;
            }
            stack.pop();
        }
        false
    }

    /// Rejects the graph with a clique witness unless it is `K_s`-free.
    pub fn require_clique_free(&self, s: usize) -> Result<()> {
        match self.find_clique(s) {
            Some(c) => Err(Error::precondition(format!("graph contains K_{s}"), Witness::Vertices(c))),
            None => Ok(()),
        }
    }

    pub fn is_clique(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Component label per vertex, labels numbered by first vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for s in 0..self.n {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if comp[v] == usize::MAX {
                        comp[v] = next;
                        stack.push(v);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    pub fn component_count(&self) -> usize {
        self.components().iter().max().map_or(0, |&c| c + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// At least three vertices, connected, and no cut vertex.
    pub fn is_two_connected(&self) -> bool {
        self.n >= 3 && self.is_connected() && (0..self.n).all(|v| self.remove_vertex(v).is_connected())
    }

    /// True unless the graph is a forest.
    pub fn has_cycle(&self) -> bool {
        self.edge_count() + self.component_count() > self.n
    }

    /// Length of a shortest cycle, or None for a forest.
    pub fn girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        let mut dist = vec![usize::MAX; self.n];
        let mut parent = vec![usize::MAX; self.n];
        for s in 0..self.n {
            dist.fill(usize::MAX);
            parent.fill(usize::MAX);
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 >= best {
                    break;
                }
                for w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        best = best.min(dist[u] + dist[w] + 1);
                    }
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// A proper 2-colouring (`false`/`true` sides), if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side = vec![None; self.n];
        for s in 0..self.n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let su = side[u].unwrap();
                for v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            stack.push(v);
                        }
                        Some(sv) if sv == su => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// First pair `v < w` of distinct non-adjacent vertices.
    pub fn first_nonadjacent_pair(&self) -> Option<(usize, usize)> {
        (0..self.n).flat_map(|v| (v + 1..self.n).map(move |w| (v, w))).find(|&(v, w)| !self.has_edge(v, w))
    }
}

/// Named graphs used throughout tests, examples and the CLI.
pub mod named {
    use super::Graph;

    pub fn empty(n: usize) -> Graph {
        Graph::new(n)
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// # Panics
    /// For `n < 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut g = path(n);
        g.add_edge(n - 1, 0);
        g
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i + 5`.
    pub fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        complete_multipartite(&[a, b])
    }

    /// Parts are consecutive index ranges in the order given.
    pub fn complete_multipartite(parts: &[usize]) -> Graph {
        let n = parts.iter().sum();
        let mut part_of = Vec::with_capacity(n);
        for (i, &p) in parts.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, p));
        }
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                if part_of[u] != part_of[v] {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Circulant graph: `i ~ i ± j (mod n)` for each jump `j`.
    pub fn circulant(n: usize, jumps: &[usize]) -> Graph {
        let mut g = Graph::new(n);
        for i in 0..n {
            for &j in jumps {
                let k = (i + j) % n;
                if k != i {
                    g.add_edge(i, k);
                }
            }
        }
        g
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn girth_values() {
        assert_eq!(named::petersen().girth(), Some(5));
        assert_eq!(named::complete(4).girth(), Some(3));
        assert_eq!(named::cycle(9).girth(), Some(9));
        assert_eq!(named::complete_bipartite(2, 3).girth(), Some(4));
        assert_eq!(named::path(6).girth(), None);
    }

    #[test]
    fn adjacency_is_symmetric_and_irreflexive() {
        let g = petersen();
        for u in 0..10 {
            assert!(!g.has_edge(u, u));
            assert_eq!(g.degree(u), 3);
            for v in 0..10 {
                assert_eq!(g.has_edge(u, v), g.has_edge(v, u));
            }
        }
        assert_eq!(g.edge_count(), 15);
    }

    #[test]
    fn induced_subgraph_examples() {
        let c5 = cycle(5);
        let s = VertexSet::from_vertices(5, [0, 1, 2]).unwrap();
        assert_eq!(c5.induced_subgraph(&s).unwrap(), path(3));

        let k4 = complete(4);
        let one = VertexSet::from_vertices(4, [0]).unwrap();
        let g = k4.induced_subgraph(&one).unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));

        // independence of {0, 2, 8, 9} is rechecked pairwise first
        let p = petersen();
        let s = VertexSet::from_vertices(10, [0, 2, 8, 9]).unwrap();
        for &u in &[0, 2, 8, 9] {
            for &v in &[0, 2, 8, 9] {
                assert!(!p.has_edge(u, v), "{u} {v}");
            }
        }
        let g = p.induced_subgraph(&s).unwrap();
        assert_eq!((g.n(), g.edge_count()), (4, 0));

        let wide = VertexSet::from_vertices(20, [3, 15]).unwrap();
        assert!(c5.induced_subgraph(&wide).is_err());
    }

    #[test]
    fn clique_and_triangle_search() {
        assert_eq!(cycle(5).find_triangle(), None);
        assert_eq!(complete(4).find_triangle(), Some([0, 1, 2]));
        assert_eq!(complete_multipartite(&[5, 5, 5, 5]).find_clique(4).map(|c| c.len()), Some(4));
        assert_eq!(complete_multipartite(&[5, 5, 5, 5]).find_clique(5), None);
        assert!(cycle(5).blowup(4).find_clique(3).is_none());
        let big = complete(70);
        assert_eq!(big.find_clique(66).unwrap().len(), 66);
    }

    #[test]
    fn connectivity_predicates() {
        assert!(cycle(5).is_two_connected());
        assert!(!path(4).is_two_connected());
        assert!(!path(4).has_cycle());
        assert!(cycle(4).has_cycle());
        assert!(complete_bipartite(3, 3).bipartition().is_some());
        assert!(cycle(5).bipartition().is_none());
        assert_eq!(complete(3).first_nonadjacent_pair(), None);
        assert_eq!(cycle(5).first_nonadjacent_pair(), Some((0, 2)));
    }
}
