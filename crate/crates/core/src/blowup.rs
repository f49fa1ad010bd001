//! Random blowups of a pattern placed inside edge-disjoint clique covers.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Witness};
use crate::graph::Graph;
use crate::hom::is_hom_free;
use crate::hypergraph::Audit;
use crate::rng::SeededRng;
use crate::vertex_set::VertexSet;

/// A family of cliques of a host graph.
///
/// [`CliqueCover::new`] enforces the full contract: every set is a clique,
/// any two share at most one vertex, and every host edge lies in exactly one
/// clique. Covers produced from non-linear hypergraphs may violate the
/// middle condition; use the `check_*` audits on those.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueCover {
    host: Graph,
    cliques: Vec<VertexSet>,
}

impl CliqueCover {
    pub fn new(host: Graph, cliques: Vec<VertexSet>) -> Result<Self> {
        let cover = CliqueCover::unchecked(host, cliques)?;
        cover.require_partition_shape()?;
        if let Audit::Violation((u, v)) = cover.check_covering() {
            return Err(Error::precondition("host edge lies in no clique", Witness::Vertices(vec![u, v])));
        }
        Ok(cover)
    }

    /// Wraps the sets without validating them; run the `check_*` audits.
    pub fn unchecked(host: Graph, cliques: Vec<VertexSet>) -> Result<Self> {
        if let Some(c) = cliques.iter().find(|c| c.universe() != host.n()) {
            return Err(Error::invalid(format!(
                "clique over ground set {} but host has {} vertices",
                c.universe(),
                host.n()
            )));
        }
        Ok(CliqueCover { host, cliques })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn cliques(&self) -> &[VertexSet] {
        &self.cliques
    }

    /// First `(clique, u, v)` with `u ≁ v` inside a listed set.
    pub fn check_cliques(&self) -> Audit<(usize, usize, usize)> {
        for (i, c) in self.cliques.iter().enumerate() {
            let members = c.to_vec();
            for (a, &u) in members.iter().enumerate() {
                if let Some(&v) = members[a + 1..].iter().find(|&&v| !self.host.has_edge(u, v)) {
                    return Audit::Violation((i, u, v));
                }
            }
        }
        Audit::Pass
    }

    /// First pair of cliques sharing two or more vertices.
    pub fn check_edge_disjoint(&self) -> Audit<[usize; 2]> {
        let mut containing: Vec<Vec<usize>> = vec![Vec::new(); self.host.n()];
        for (i, c) in self.cliques.iter().enumerate() {
            for v in c.iter() {
                containing[v].push(i);
            }
        }
        let mut shared = vec![0u32; self.cliques.len()];
        for (i, c) in self.cliques.iter().enumerate() {
            let mut hit = None;
            for v in c.iter() {
                for &j in containing[v].iter().filter(|&&j| j > i) {
                    shared[j] += 1;
                    if shared[j] >= 2 && hit.is_none_or(|h| j < h) {
                        hit = Some(j);
                    }
                }
            }
            for v in c.iter() {
                for &j in &containing[v] {
                    shared[j] = 0;
                }
            }
            if let Some(j) = hit {
                return Audit::Violation([i, j]);
            }
        }
        Audit::Pass
    }

    /// First host edge contained in no clique.
    pub fn check_covering(&self) -> Audit<(usize, usize)> {
        let mut covered = Graph::new(self.host.n());
        for c in &self.cliques {
            let m = c.to_vec();
            for (a, &u) in m.iter().enumerate() {
                for &v in &m[a + 1..] {
                    covered.add_edge(u, v);
                }
            }
        }
        self.host.edges().into_iter().find(|&(u, v)| !covered.has_edge(u, v)).map_or(Audit::Pass, Audit::Violation)
    }

    fn require_partition_shape(&self) -> Result<()> {
        if let Audit::Violation((_, u, v)) = self.check_cliques() {
            return Err(Error::precondition("cover set is not a clique", Witness::Vertices(vec![u, v])));
        }
        if let Audit::Violation([i, j]) = self.check_edge_disjoint() {
            let w = Witness::Edges(vec![self.cliques[i].to_vec(), self.cliques[j].to_vec()]);
            return Err(Error::precondition("cover cliques share an edge", w));
        }
        Ok(())
    }
}

/// The per-clique colourings `χ_c : clique → V(F)` behind a blowup.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlowupColoring {
    pub pattern: Graph,
    /// Clique members, increasing; `colors[c][i]` colours `cliques[c][i]`.
    pub cliques: Vec<Vec<usize>>,
    pub colors: Vec<Vec<usize>>,
    pub seed: u64,
    pub label: String,
}

impl BlowupColoring {
    /// Recomputes the blown-up edge set on `n` vertices from the colouring alone.
    pub fn rederive(&self, n: usize) -> Graph {
        let mut g = Graph::new(n);
        for (members, colors) in self.cliques.iter().zip(&self.colors) {
            for i in 0..members.len() {
                for j in i + 1..members.len() {
                    if self.pattern.has_edge(colors[i], colors[j]) {
                        g.add_edge(members[i], members[j]);
                    }
                }
            }
        }
        g
    }
}

/// Places an independent uniformly random blowup of `pattern` in every
/// clique: `{x, y}` survives iff its clique colours it with the two ends of
/// an edge of `pattern`. Host edges outside every clique are dropped.
pub fn random_blowup(cover: &CliqueCover, pattern: &Graph, rng: &SeededRng) -> Result<(Graph, BlowupColoring)> {
    if pattern.edge_count() == 0 {
        return Err(Error::invalid("blowup pattern must have an edge"));
    }
    cover.require_partition_shape()?;
    let t = pattern.n();
    let cliques: Vec<Vec<usize>> = cover.cliques.iter().map(VertexSet::to_vec).collect();
    let colors: Vec<Vec<usize>> = cliques
        .par_iter()
        .enumerate()
        .map(|(c, members)| {
            let mut r = rng.substream(format!("clique/{c}"));
            members.iter().map(|_| r.gen_range(0..t)).collect()
        })
        .collect();
    let coloring =
        BlowupColoring { pattern: pattern.clone(), cliques, colors, seed: rng.seed(), label: rng.label().to_string() };
    let g = coloring.rederive(cover.host.n());
    Ok((g, coloring))
}

/// Log-space evaluation of the union bound over `N`-sets of a blowup built
/// from an `R`-uniform linear hypergraph with a `t`-vertex pattern.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FailureBound {
    pub t: u64,
    pub r: u64,
    pub n: u64,
    /// `ln C(N², N)`.
    pub log_sets: f64,
    /// `N ln t + R N ln(1 - 1/t)`.
    pub log_set_failure: f64,
    /// `log_sets + log_set_failure`: log of the expected number of
    /// pattern-free `N`-sets.
    pub log_expected: f64,
    /// The expected count is below one.
    pub guaranteed: bool,
    /// `N ln t - R N / t < -2 N ln N`.
    pub simplified_chain_holds: bool,
}

fn ln_binomial(m: u64, k: u64) -> f64 {
    if k > m {
        return f64::NEG_INFINITY;
    }
    let k = k.min(m - k);
    (0..k).map(|i| ((m - i) as f64).ln() - ((i + 1) as f64).ln()).sum()
}

/// Union-bound failure estimate for `t = |V(F)|`, uniformity `R`, target `N`.
pub fn theorem1_failure_bound(t: u64, r: u64, n: u64) -> Result<FailureBound> {
    if t < 2 || n < 2 {
        return Err(Error::invalid(format!("need t >= 2 and N >= 2, got t = {t}, N = {n}")));
    }
    let (tf, rf, nf) = (t as f64, r as f64, n as f64);
    let log_sets = ln_binomial(n * n, n);
    let log_set_failure = nf * tf.ln() + rf * nf * (-1.0 / tf).ln_1p();
    let log_expected = log_sets + log_set_failure;
    Ok(FailureBound {
        t,
        r,
        n,
        log_sets,
        log_set_failure,
        log_expected,
        guaranteed: log_expected < 0.0,
        simplified_chain_holds: nf * tf.ln() - rf * nf / tf < -2.0 * nf * nf.ln(),
    })
}

/// The uniformity rule `R = ⌈3 t ln t ln N⌉` under which the union bound is
/// designed to succeed.
pub fn theorem1_required_uniformity(t: u64, n: u64) -> u64 {
    (3.0 * t as f64 * (t as f64).ln() * (n as f64).ln()).ceil() as u64
}

/// Square of a bipartite graph restricted to `left`, covered by the
/// left-neighbourhoods of right vertices.
///
/// Host vertex `i` is the `i`-th smallest member of `left`.
pub fn square_clique_cover(bip: &Graph, left: &VertexSet) -> Result<CliqueCover> {
    if left.universe() != bip.n() {
        return Err(Error::invalid("left side must be a subset of the bipartite graph's vertices"));
    }
    for (u, v) in bip.edges() {
        if left.contains(u) == left.contains(v) {
            return Err(Error::precondition("edge inside one side", Witness::Vertices(vec![u, v])));
        }
    }
    let right: Vec<usize> = (0..bip.n()).filter(|&v| !left.contains(v)).collect();
    let mut shared = vec![0u32; bip.n()];
    let mut first_common = vec![usize::MAX; bip.n()];
    for &y in &right {
        for x in bip.neighbors(y) {
            for y2 in bip.neighbors(x).filter(|&y2| y2 > y) {
                shared[y2] += 1;
                if shared[y2] == 1 {
                    first_common[y2] = x;
                } else {
                    let w = Witness::Vertices(vec![first_common[y2], y, x, y2]);
                    return Err(Error::precondition("bipartite graph has a 4-cycle", w));
                }
            }
        }
        for x in bip.neighbors(y) {
            for y2 in bip.neighbors(x) {
                shared[y2] = 0;
            }
        }
    }
    let lefts = left.to_vec();
    let mut rank = vec![usize::MAX; bip.n()];
    for (i, &x) in lefts.iter().enumerate() {
        rank[x] = i;
    }
    let mut host = Graph::new(lefts.len());
    let mut cliques = Vec::new();
    for &y in &right {
        let members: Vec<usize> = bip.neighbors(y).map(|x| rank[x]).collect();
        if members.len() < 2 {
            continue;
        }
        for (a, &u) in members.iter().enumerate() {
            for &v in &members[a + 1..] {
                host.add_edge(u, v);
            }
        }
        cliques.push(VertexSet::from_vertices(lefts.len(), members)?);
    }
    CliqueCover::new(host, cliques)
}

/// The pattern pair `(F, G)` with its structural facts computed once.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternPair {
    pub f: Graph,
    pub g: Graph,
    pub f_triangle_free: bool,
    pub f_hom_g_free: bool,
    pub g_two_connected: bool,
    pub g_clique: bool,
}

impl PatternPair {
    pub fn new(f: Graph, g: Graph) -> Result<Self> {
        if f.edge_count() == 0 {
            return Err(Error::invalid("F must have at least one edge"));
        }
        Ok(PatternPair {
            f_triangle_free: f.is_triangle_free(),
            f_hom_g_free: is_hom_free(&f, &g).hom_free,
            g_two_connected: g.is_two_connected(),
            g_clique: g.is_clique(),
            f,
            g,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn single(g: Graph) -> CliqueCover {
        let n = g.n();
        CliqueCover::new(g, vec![VertexSet::full(n)]).unwrap()
    }

    #[test]
    fn blowup_of_k3_by_k2_is_bipartite() {
        for seed in 0..20 {
            let (g, col) = random_blowup(&single(complete(3)), &complete(2), &SeededRng::new(seed, "t")).unwrap();
            assert!(g.is_triangle_free());
            assert!(g.bipartition().is_some());
            assert_eq!(col.rederive(3), g);
        }
    }

    #[test]
    fn blowup_of_k4_by_c4_is_triangle_free() {
        for seed in 0..20 {
            let (g, _) = random_blowup(&single(complete(4)), &cycle(4), &SeededRng::new(seed, "t")).unwrap();
            assert!(g.is_triangle_free());
        }
    }

    #[test]
    fn blowup_rejects_overlapping_cliques() {
        let host = complete(4);
        let a = VertexSet::from_vertices(4, [0, 1, 2]).unwrap();
        let b = VertexSet::from_vertices(4, [0, 1, 3]).unwrap();
        assert!(CliqueCover::new(host.clone(), vec![a.clone(), b.clone()]).is_err());
        let cover = CliqueCover::unchecked(host, vec![a, b]).unwrap();
        let err = random_blowup(&cover, &complete(2), &SeededRng::new(0, "t")).unwrap_err();
        assert!(err.witness().is_some());
        assert!(random_blowup(&single(complete(3)), &Graph::new(3), &SeededRng::new(0, "t")).is_err());
    }

    #[test]
    fn failure_bound_examples() {
        let n = 100;
        let r = theorem1_required_uniformity(2, n);
        assert_eq!(r, 20);
        assert!(theorem1_failure_bound(2, r, n).unwrap().guaranteed);
        let b = theorem1_failure_bound(2, 0, n).unwrap();
        assert!(b.log_expected >= 0.0 && !b.guaranteed);
        assert!(!theorem1_failure_bound(2, 1, 10).unwrap().guaranteed);
        assert!(theorem1_failure_bound(1, 1, 10).is_err());
        // ln C(4, 2) = ln 6
        assert!((ln_binomial(4, 2) - 6f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn square_cover_examples() {
        // C6 with left = even vertices
        let c6 = cycle(6);
        let left = VertexSet::from_vertices(6, [0, 2, 4]).unwrap();
        let cover = square_clique_cover(&c6, &left).unwrap();
        assert_eq!(cover.host(), &complete(3));
        assert_eq!(cover.cliques().len(), 3);

        // perfect matching: empty host, empty cover
        let m = Graph::from_edges(6, [(0, 3), (1, 4), (2, 5)]).unwrap();
        let left = VertexSet::from_vertices(6, [0, 1, 2]).unwrap();
        let cover = square_clique_cover(&m, &left).unwrap();
        assert_eq!((cover.host().edge_count(), cover.cliques().len()), (0, 0));

        // one right vertex on three lefts
        let star = Graph::from_edges(4, [(3, 0), (3, 1), (3, 2)]).unwrap();
        let left = VertexSet::from_vertices(4, [0, 1, 2]).unwrap();
        let cover = square_clique_cover(&star, &left).unwrap();
        assert_eq!(cover.host(), &complete(3));
        assert_eq!(cover.cliques().len(), 1);

        let k22 = complete_bipartite(2, 2);
        let left = VertexSet::from_vertices(4, [0, 1]).unwrap();
        let err = square_clique_cover(&k22, &left).unwrap_err();
        assert_eq!(err.witness().unwrap(), &Witness::Vertices(vec![0, 2, 1, 3]));
    }

    #[test]
    fn pattern_pair_flags() {
        let p = PatternPair::new(cycle(5), complete(3)).unwrap();
        assert!(p.f_triangle_free && p.f_hom_g_free && p.g_clique && p.g_two_connected);
        assert!(PatternPair::new(Graph::new(3), complete(3)).is_err());
    }
}
