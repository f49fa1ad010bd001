//! Hypergraphs over integer vertices and their exact structural audits.

use serde::{Deserialize, Serialize};

use crate::blowup::CliqueCover;
use crate::error::{Error, Result, Witness};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A family of distinct vertex sets over `[0, n)`.
///
/// Edges are stored as strictly increasing vertex lists in the order they
/// were supplied, which keeps the text format round trip exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HypergraphRepr")]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    uniformity: Option<usize>,
}

#[derive(Deserialize)]
struct HypergraphRepr {
    n: usize,
    edges: Vec<Vec<usize>>,
    uniformity: Option<usize>,
}

impl TryFrom<HypergraphRepr> for Hypergraph {
    type Error = Error;

    fn try_from(r: HypergraphRepr) -> Result<Self> {
        Hypergraph::new(r.n, r.edges, r.uniformity)
    }
}

/// Result of an exhaustive audit: pass, or the offending objects.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Audit<W> {
    Pass,
    Violation(W),
}

impl<W> Audit<W> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Audit::Pass)
    }

    pub fn violation(&self) -> Option<&W> {
        match self {
            Audit::Pass => None,
            Audit::Violation(w) => Some(w),
        }
    }
}

/// A loose cycle: `edges[i] ∩ edges[i+1] = {vertices[i+1]}` (indices mod
/// length) and non-consecutive edges disjoint. For length 2, `vertices`
/// lists the (at least two) shared vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LooseCycle {
    pub edges: Vec<usize>,
    pub vertices: Vec<usize>,
}

impl LooseCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

fn intersection_size(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut c) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                c += 1;
                i += 1;
                j += 1;
            }
        }
    }
    c
}

fn intersection(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| b.binary_search(x).is_ok()).collect()
}

impl Hypergraph {
    /// Validates and normalizes: each edge is sorted, non-empty, duplicate
    /// free, in range; edges are pairwise distinct; sizes match `uniformity`.
    pub fn new(n: usize, edges: Vec<Vec<usize>>, uniformity: Option<usize>) -> Result<Self> {
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        let mut out = Vec::with_capacity(edges.len());
        for (i, mut e) in edges.into_iter().enumerate() {
            e.sort_unstable();
            if e.is_empty() {
                return Err(Error::invalid(format!("edge {i} is empty")));
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::invalid(format!("edge {i} repeats a vertex")));
            }
            if let Some(&v) = e.last().filter(|&&v| v >= n) {
                return Err(Error::invalid(format!("edge {i} has vertex {v} out of range for n = {n}")));
            }
            if let Some(r) = uniformity.filter(|&r| r != e.len()) {
                return Err(Error::invalid(format!("edge {i} has size {} but uniformity is {r}", e.len())));
            }
            if !seen.insert(e.clone()) {
                return Err(Error::invalid(format!("edge {i} duplicates an earlier edge")));
            }
            out.push(e);
        }
        Ok(Hypergraph { n, edges: out, uniformity })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, i: usize) -> &[usize] {
        &self.edges[i]
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn uniformity(&self) -> Option<usize> {
        self.uniformity
    }

    /// Edge indices containing each vertex, increasing.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    pub fn degree_sum(&self) -> usize {
        self.edges.iter().map(Vec::len).sum()
    }

    /// Sub-hypergraph keeping the edges whose index satisfies `keep`.
    pub fn retain_edges(&self, mut keep: impl FnMut(usize) -> bool) -> Hypergraph {
        let edges = self.edges.iter().enumerate().filter(|&(i, _)| keep(i)).map(|(_, e)| e.clone()).collect();
        Hypergraph { n: self.n, edges, uniformity: self.uniformity }
    }

    pub fn edges_witness(&self, idx: &[usize]) -> Witness {
        Witness::Edges(idx.iter().map(|&i| self.edges[i].clone()).collect())
    }

    /// True iff `s` contains no edge entirely.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        self.edges.iter().all(|e| !e.iter().all(|&v| s.contains(v)))
    }

    /// Lexicographically least pair of edge indices sharing two or more
    /// vertices, if any.
    pub fn check_linear(&self) -> Audit<[usize; 2]> {
        let inc = self.incidence();
        let mut shared = vec![0u32; self.edges.len()];
        let mut touched = Vec::new();
        for (a, e) in self.edges.iter().enumerate() {
            let mut best: Option<usize> = None;
            for &v in e {
                for &b in inc[v].iter().filter(|&&b| b > a) {
                    if shared[b] == 0 {
                        touched.push(b);
                    }
                    shared[b] += 1;
                    if shared[b] >= 2 && best.is_none_or(|x| b < x) {
                        best = Some(b);
                    }
                }
            }
            for b in touched.drain(..) {
                shared[b] = 0;
            }
            if let Some(b) = best {
                return Audit::Violation([a, b]);
            }
        }
        Audit::Pass
    }

    /// Triangle-freeness in the linear sense: three edges meeting pairwise
    /// in single vertices must share a vertex. Non-linear input is rejected
    /// with the violating pair.
    pub fn check_triangle_free(&self) -> Result<Audit<[usize; 3]>> {
        if let Audit::Violation(pair) = self.check_linear() {
            return Err(Error::precondition("hypergraph is not linear", self.edges_witness(&pair)));
        }
        let inc = self.incidence();
        let none = usize::MAX;
        let mut contact = vec![none; self.edges.len()];
        for (a, e) in self.edges.iter().enumerate() {
            let mut near = Vec::new();
            for &u in e {
                for &f in inc[u].iter().filter(|&&f| f != a) {
                    contact[f] = u;
                    near.push(f);
                }
            }
            near.sort_unstable();
            let mut found: Option<[usize; 3]> = None;
            for &f in near.iter().filter(|&&f| f > a) {
                for &z in self.edges[f].iter().filter(|&&z| z != contact[f]) {
                    for &g in inc[z].iter().filter(|&&g| g > a && g != f) {
                        if contact[g] != none && contact[g] != contact[f] {
                            let mut t = [a, f, g];
                            t.sort_unstable();
                            if found.is_none_or(|x| t < x) {
                                found = Some(t);
                            }
                        }
                    }
                }
            }
            for f in near {
                contact[f] = none;
            }
            if let Some(t) = found {
                return Ok(Audit::Violation(t));
            }
        }
        Ok(Audit::Pass)
    }

    /// Every loose cycle of exactly `len` edges (`len ≥ 2`), each reported
    /// once: the first edge has the least index and `edges[1] < edges[len-1]`.
    /// Stops after `cap` cycles when given.
    pub fn loose_cycles(&self, len: usize, cap: Option<usize>) -> Vec<LooseCycle> {
        let mut out = Vec::new();
        let cap = cap.unwrap_or(usize::MAX);
        if len < 2 || cap == 0 {
            return out;
        }
        if len == 2 {
            let inc = self.incidence();
            for (a, e) in self.edges.iter().enumerate() {
                let mut partners: Vec<usize> =
                    e.iter().flat_map(|&v| inc[v].iter().copied()).filter(|&b| b > a).collect();
                partners.sort_unstable();
                partners.dedup();
                for b in partners {
                    let common = intersection(e, &self.edges[b]);
                    if common.len() >= 2 {
                        out.push(LooseCycle { edges: vec![a, b], vertices: common });
                        if out.len() >= cap {
                            return out;
                        }
                    }
                }
            }
            return out;
        }
        let inc = self.incidence();
        let mut state = CycleSearch { h: self, inc: &inc, len, cap, edges: Vec::new(), verts: Vec::new(), out };
        for a in 0..self.edges.len() {
            state.edges.push(a);
            state.grow();
            state.edges.pop();
            if state.out.len() >= cap {
                break;
            }
        }
        state.out
    }

    /// Passes iff there is no loose cycle shorter than `g`; otherwise returns
    /// a shortest one.
    pub fn check_girth_at_least(&self, g: usize) -> Audit<LooseCycle> {
        for len in 2..g {
            if let Some(c) = self.loose_cycles(len, Some(1)).into_iter().next() {
                return Audit::Violation(c);
            }
        }
        Audit::Pass
    }

    /// The intersection graph on edge indices (`e ~ f` iff they meet) and the
    /// family of stars `K_v = {e : v ∈ e}` with at least two members.
    pub fn line_intersection_graph(&self) -> Result<(Graph, CliqueCover)> {
        if self.edges.is_empty() {
            return Err(Error::invalid("line graph of a hypergraph with no edges"));
        }
        let m = self.edges.len();
        let mut g = Graph::new(m);
        let mut cliques = Vec::new();
        for star in self.incidence() {
            if star.len() < 2 {
                continue;
            }
            for (i, &a) in star.iter().enumerate() {
                for &b in &star[i + 1..] {
                    g.add_edge(a, b);
                }
            }
            cliques.push(VertexSet::from_vertices(m, star)?);
        }
        let cover = CliqueCover::unchecked(g.clone(), cliques)?;
        Ok((g, cover))
    }
}

struct CycleSearch<'a> {
    h: &'a Hypergraph,
    inc: &'a [Vec<usize>],
    len: usize,
    cap: usize,
    /// `edges[0..i]`; `verts[j]` joins `edges[j]` and `edges[j+1]`.
    edges: Vec<usize>,
    verts: Vec<usize>,
    out: Vec<LooseCycle>,
}

impl CycleSearch<'_> {
    fn grow(&mut self) {
        if self.out.len() >= self.cap {
            return;
        }
        let i = self.edges.len();
        let first = self.edges[0];
        let last = self.edges[i - 1];
        let last_edge = &self.h.edges[last];
        let entry = self.verts.last().copied();
        for &v in last_edge.iter().filter(|&&v| Some(v) != entry) {
            if self.verts.contains(&v) {
                continue;
            }
            for &f in &self.inc[v] {
                if f <= first || self.edges.contains(&f) {
                    continue;
                }
                let fe = &self.h.edges[f];
                if intersection_size(fe, last_edge) != 1 {
                    continue;
                }
                let closing = i + 1 == self.len;
                if closing && f < self.edges[1] {
                    continue;
                }
                // disjoint from every non-neighbour on the cycle
                let lo = if closing { 1 } else { 0 };
                if self.edges[lo..i - 1].iter().any(|&e| intersection_size(fe, &self.h.edges[e]) > 0) {
                    continue;
                }
                self.edges.push(f);
                self.verts.push(v);
                if closing {
                    let fe0 = &self.h.edges[first];
                    let common = intersection(fe, fe0);
                    if common.len() == 1 && !self.verts.contains(&common[0]) {
                        let mut vertices = vec![common[0]];
                        vertices.extend(&self.verts);
                        self.out.push(LooseCycle { edges: self.edges.clone(), vertices });
                    }
                } else {
                    self.grow();
                }
                self.edges.pop();
                self.verts.pop();
                if self.out.len() >= self.cap {
                    return;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect(), None).unwrap()
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        assert!(Hypergraph::new(3, vec![vec![0, 0]], None).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 3]], None).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 1], vec![1, 0]], None).is_err());
        assert!(Hypergraph::new(3, vec![vec![0, 1]], Some(3)).is_err());
        assert_eq!(Hypergraph::new(3, vec![vec![2, 0]], None).unwrap().edge(0), &[0, 2]);
    }

    #[test]
    fn linearity_examples() {
        assert!(hg(5, &[&[0, 1, 2], &[0, 3, 4]]).check_linear().is_pass());
        assert_eq!(hg(4, &[&[0, 1, 2], &[0, 1, 3]]).check_linear(), Audit::Violation([0, 1]));
    }

    #[test]
    fn triangle_examples() {
        let t = hg(6, &[&[0, 1, 2], &[2, 3, 4], &[0, 4, 5]]);
        assert_eq!(t.check_triangle_free().unwrap(), Audit::Violation([0, 1, 2]));
        let star = hg(7, &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        assert!(star.check_triangle_free().unwrap().is_pass());
        let bad = hg(4, &[&[0, 1, 2], &[0, 1, 3]]);
        assert!(bad.check_triangle_free().is_err());
    }

    #[test]
    fn girth_examples() {
        let two = hg(4, &[&[0, 1, 2], &[0, 1, 3]]);
        let c = two.check_girth_at_least(3);
        assert_eq!(c.violation().unwrap().vertices, vec![0, 1]);
        let path = hg(7, &[&[0, 1, 2], &[2, 3, 4], &[4, 5, 6]]);
        assert!(path.check_girth_at_least(5).is_pass());
        // loose 3-cycle of 3-edges plus a 4-cycle of 2-edges
        let tri = hg(6, &[&[0, 1, 2], &[2, 3, 4], &[0, 4, 5]]);
        let c = tri.check_girth_at_least(4);
        assert_eq!(c.violation().unwrap().len(), 3);
        let c4 = hg(4, &[&[0, 1], &[1, 2], &[2, 3], &[0, 3]]);
        assert!(c4.check_girth_at_least(4).is_pass());
        assert_eq!(c4.check_girth_at_least(5).violation().unwrap().edges, vec![0, 1, 2, 3]);
        assert!(Hypergraph::new(3, vec![], Some(3)).unwrap().check_girth_at_least(10).is_pass());
    }

    #[test]
    fn loose_cycles_counted_once() {
        // K4 as a 2-uniform hypergraph: 4 triangles, 3 four-cycles
        let k4 = hg(4, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]);
        assert_eq!(k4.loose_cycles(3, None).len(), 4);
        assert_eq!(k4.loose_cycles(4, None).len(), 3);
        // three edges through a common vertex are not a loose 3-cycle
        let star = hg(7, &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        assert!(star.loose_cycles(3, None).is_empty());
    }

    #[test]
    fn line_graph_examples() {
        let p = hg(4, &[&[0, 1], &[1, 2], &[2, 3]]);
        let (g, cover) = p.line_intersection_graph().unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        let cl: Vec<Vec<usize>> = cover.cliques().iter().map(|c| c.to_vec()).collect();
        assert_eq!(cl, vec![vec![0, 1], vec![1, 2]]);

        let s = hg(7, &[&[0, 1, 2], &[0, 3, 4], &[0, 5, 6]]);
        let (g, cover) = s.line_intersection_graph().unwrap();
        assert!(g.is_clique() && g.n() == 3);
        assert_eq!(cover.cliques().len(), 1);
        assert!(Hypergraph::new(2, vec![], None).unwrap().line_intersection_graph().is_err());
    }
}
