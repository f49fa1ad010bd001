//! Both halves of the general bound: the high-girth bipartite square with
//! random blowups, and G-free graphs built from a high-girth hypergraph with
//! a random copy of `G*` in every edge.

use rand::seq::{index, SliceRandom};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::blowup::{random_blowup, square_clique_cover, BlowupColoring, CliqueCover};
use crate::certificate::Certificate;
use crate::error::{Error, Result, Witness};
use crate::graph::Graph;
use crate::hom::is_hom_free;
use crate::hypergraph::{Audit, Hypergraph};
use crate::rng::SeededRng;
use crate::subgraph::Budget;
use crate::vertex_set::VertexSet;

use super::{max_f_free_measure, record_free, record_search};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GPlusFamily {
    pub base: Graph,
    pub v: usize,
    pub w: usize,
    /// `G` plus every missing edge between `{v, w}` and `N(v) ∪ N(w)`.
    pub gplus: Graph,
    /// `G⁺ - w`; vertices above `w` shift down by one.
    pub gstar: Graph,
    /// `G⁺ - {v, w}`, remaining vertices in increasing order.
    pub gstarstar: Graph,
    /// `|V(G)| - 1`.
    pub r: usize,
}

pub fn gplus_family(g: &Graph, v: usize, w: usize) -> Result<GPlusFamily> {
    let n = g.n();
    if v >= n || w >= n || v == w {
        return Err(Error::invalid(format!("({v}, {w}) is not a pair of distinct vertices of an {n}-vertex graph")));
    }
    if g.has_edge(v, w) {
        return Err(Error::precondition("v and w must be nonadjacent", Witness::Vertices(vec![v, w])));
    }
    let joined = g.neighborhood(v).union(&g.neighborhood(w));
    let mut gplus = g.clone();
    for x in joined.iter() {
        for y in [v, w] {
            if !gplus.has_edge(x, y) {
                gplus.add_edge(x, y);
            }
        }
    }
    // clones: identical rows off {v, w}, still nonadjacent
    let clones = !gplus.has_edge(v, w)
        && (0..n).filter(|&x| x != v && x != w).all(|x| gplus.has_edge(x, v) == gplus.has_edge(x, w));
    if !clones {
        return Err(Error::ValidationFault("v and w are not clones in G+".into()));
    }
    let gstar = gplus.remove_vertex(w);
    let rest: Vec<usize> = (0..n).filter(|&x| x != v && x != w).collect();
    let gstarstar = gplus.induced_on(&rest);
    Ok(GPlusFamily { base: g.clone(), v, w, gplus, gstar, gstarstar, r: n - 1 })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PruneClass {
    pub length: usize,
    /// The chosen edge-disjoint cycles, each as its list of edges.
    pub cycles: Vec<Vec<Vec<usize>>>,
    pub removed_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GirthHypergraphParams {
    pub t: usize,
    pub r: usize,
    /// `t^{1 - r + 1/(2r)}`.
    pub p: f64,
    /// `1 / (5 r²)`.
    pub delta: f64,
    pub sampled_edges: usize,
    pub pruning: Vec<PruneClass>,
    pub surviving_edges: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GirthHypergraph {
    pub hypergraph: Hypergraph,
    pub params: GirthHypergraphParams,
}

const MAX_CANDIDATE_EDGES: f64 = 5e7;

fn binomial_f64(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    (0..k).map(|i| (n - i) as f64 / (i + 1) as f64).product()
}

/// Binomial random r-uniform hypergraph at `p = t^{1-r+1/(2r)}`, then for
/// each length `ℓ = 2..=r+1` a greedy maximal edge-disjoint family of
/// ℓ-cycles of the sampled hypergraph has all its edges deleted. The result
/// is audited for girth at least `r + 2`.
pub fn random_girth_hypergraph(t: usize, r: usize, rng: &SeededRng) -> Result<GirthHypergraph> {
    if r < 2 {
        return Err(Error::invalid(format!("uniformity r = {r} must be at least 2")));
    }
    if t < r {
        return Err(Error::invalid(format!("t = {t} is smaller than r = {r}")));
    }
    let (tf, rf) = (t as f64, r as f64);
    let p = tf.powf(1.0 - rf + 1.0 / (2.0 * rf));
    if p > 1.0 {
        return Err(Error::invalid(format!("edge probability {p} exceeds 1; t = {t} is too small for r = {r}")));
    }
    if binomial_f64(t, r) > MAX_CANDIDATE_EDGES {
        return Err(Error::invalid(format!("C({t}, {r}) candidate edges is beyond desk scale")));
    }
    let mut sample = rng.substream("edges");
    let mut edges = Vec::new();
    let mut comb: Vec<usize> = (0..r).collect();
    loop {
        if sample.gen_bool(p) {
            edges.push(comb.clone());
        }
        // next r-combination of 0..t in lexicographic order
        let Some(i) = (0..r).rev().find(|&i| comb[i] < t - r + i) else { break };
        comb[i] += 1;
        for j in i + 1..r {
            comb[j] = comb[j - 1] + 1;
        }
    }
    let h = Hypergraph::new(t, edges, Some(r))?;
    let mut doomed = vec![false; h.edge_count()];
    let mut pruning = Vec::new();
    for len in 2..=r + 1 {
        let mut used = vec![false; h.edge_count()];
        let mut class = PruneClass { length: len, cycles: Vec::new(), removed_edges: 0 };
        for cyc in h.loose_cycles(len, None) {
            if cyc.edges.iter().any(|&e| used[e]) {
                continue;
            }
            for &e in &cyc.edges {
                used[e] = true;
                if !doomed[e] {
                    doomed[e] = true;
                    class.removed_edges += 1;
                }
            }
            class.cycles.push(cyc.edges.iter().map(|&e| h.edge(e).to_vec()).collect());
        }
        pruning.push(class);
    }
    let fstar = h.retain_edges(|i| !doomed[i]);
    if let Audit::Violation(c) = fstar.check_girth_at_least(r + 2) {
        return Err(Error::ValidationFault(format!("pruned hypergraph still has a {}-cycle", c.len())));
    }
    let params = GirthHypergraphParams {
        t,
        r,
        p,
        delta: 1.0 / (5.0 * rf * rf),
        sampled_edges: h.edge_count(),
        pruning,
        surviving_edges: fstar.edge_count(),
    };
    Ok(GirthHypergraph { hypergraph: fstar, params })
}

/// Edges with exactly one vertex outside `s`.
pub fn count_s_edges(h: &Hypergraph, s: &VertexSet) -> usize {
    h.edges().iter().filter(|e| e.iter().filter(|&&v| !s.contains(v)).count() == 1).count()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SPropLevel {
    pub s: usize,
    pub sets: usize,
    pub passes: usize,
    pub min_count: usize,
    pub max_count: usize,
    /// `(1/10) C(s, r-1) (t - s) t^{1-r+1/(2r)}`.
    pub threshold: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SPropReport {
    pub t: usize,
    pub r: usize,
    pub delta: f64,
    /// Sizes checked satisfy `t^{1-δ} < s < t`.
    pub s_min: usize,
    pub exhaustive: bool,
    pub levels: Vec<SPropLevel>,
    pub sets_checked: usize,
    pub passes: usize,
}

impl SPropReport {
    pub fn pass_rate(&self) -> Option<f64> {
        (self.sets_checked > 0).then(|| self.passes as f64 / self.sets_checked as f64)
    }
}

const EXHAUSTIVE_T: usize = 20;

/// Measures the S-edge property on every admissible `S` when `t ≤ 20`,
/// otherwise on `sample_count` random sets drawn from `sample/{i}`.
pub fn sprop_statistics(h: &Hypergraph, r: usize, sample_count: usize, rng: &SeededRng) -> Result<SPropReport> {
    if r < 2 {
        return Err(Error::invalid(format!("uniformity r = {r} must be at least 2")));
    }
    let t = h.n();
    let (tf, rf) = (t as f64, r as f64);
    let delta = 1.0 / (5.0 * rf * rf);
    let s_min = tf.powf(1.0 - delta).floor() as usize + 1;
    let p = tf.powf(1.0 - rf + 1.0 / (2.0 * rf));
    let threshold = |s: usize| 0.1 * binomial_f64(s, r - 1) * (t - s) as f64 * p;
    let mut levels: Vec<SPropLevel> = (s_min..t)
        .map(|s| SPropLevel { s, sets: 0, passes: 0, min_count: usize::MAX, max_count: 0, threshold: threshold(s) })
        .collect();
    let mut record = |set: &VertexSet| {
        let lvl = &mut levels[set.len() - s_min];
        let count = count_s_edges(h, set);
        lvl.sets += 1;
        lvl.passes += usize::from(count as f64 >= lvl.threshold);
        lvl.min_count = lvl.min_count.min(count);
        lvl.max_count = lvl.max_count.max(count);
    };
    let exhaustive = t <= EXHAUSTIVE_T;
    if exhaustive {
        for mask in 0u32..(1u32 << t) {
            let size = mask.count_ones() as usize;
            if size >= s_min && size < t {
                record(&VertexSet::from_vertices(t, (0..t).filter(|&v| mask >> v & 1 == 1))?);
            }
        }
    } else if s_min < t {
        for i in 0..sample_count {
            let mut g = rng.substream(format!("sample/{i}"));
            let s = g.gen_range(s_min..t);
            let picked = index::sample(&mut g, t, s);
            record(&VertexSet::from_vertices(t, picked.iter())?);
        }
    }
    let sets_checked = levels.iter().map(|l| l.sets).sum();
    let passes = levels.iter().map(|l| l.passes).sum();
    for l in &mut levels {
        if l.sets == 0 {
            l.min_count = 0;
        }
    }
    Ok(SPropReport { t, r, delta, s_min, exhaustive, levels, sets_checked, passes })
}

/// Bookkeeping for the sunflower counting argument, in log form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SunflowerCalculator {
    pub t: usize,
    pub r: usize,
    /// `r! + 1`.
    pub big_r: f64,
    /// `R · C(t-1, r-1)`: petals demanded of the sunflower.
    pub petals: f64,
    /// `ln T` with `T = t! (R C(t-1, r-1) - 1)^t`.
    pub ln_t: f64,
    /// `b = t^{1-δ}`.
    pub b: f64,
}

pub fn sunflower_calculator(t: usize, r: usize) -> SunflowerCalculator {
    let big_r = (1..=r).map(|i| i as f64).product::<f64>() + 1.0;
    let petals = big_r * binomial_f64(t.saturating_sub(1), r.saturating_sub(1));
    let ln_fact: f64 = (1..=t).map(|i| (i as f64).ln()).sum();
    let ln_t = ln_fact + t as f64 * (petals - 1.0).ln();
    let delta = 1.0 / (5.0 * (r * r) as f64);
    SunflowerCalculator { t, r, big_r, petals, ln_t, b: (t as f64).powf(1.0 - delta) }
}

#[derive(Debug, Clone, Copy)]
pub struct Theorem4Part2Options {
    /// The nonadjacent pair `(v, w)`; the lexicographically first when None.
    pub pair: Option<(usize, usize)>,
    pub budget: Budget,
    pub sprop_samples: usize,
}

impl Default for Theorem4Part2Options {
    fn default() -> Self {
        Theorem4Part2Options { pair: None, budget: Budget::nodes(50_000_000), sprop_samples: 50 }
    }
}

#[derive(Debug, Clone)]
pub struct Theorem4Part2 {
    pub family: GPlusFamily,
    pub fstar: GirthHypergraph,
    pub graph: Graph,
    /// `placements[e][j]` hosts vertex `j` of `G*` inside hyperedge `e`.
    pub placements: Vec<Vec<usize>>,
    pub certificate: Certificate,
}

pub fn theorem4_part2_build(g: &Graph, t: usize, rng: &SeededRng, opts: Theorem4Part2Options) -> Result<Theorem4Part2> {
    if g.is_clique() {
        return Err(Error::invalid("G is a clique; this construction needs a nonadjacent pair"));
    }
    if !g.is_two_connected() {
        return Err(Error::invalid("G is not 2-connected"));
    }
    let (v, w) = match opts.pair {
        Some(p) => p,
        None => g.first_nonadjacent_pair().expect("non-clique has a nonadjacent pair"),
    };
    let family = gplus_family(g, v, w)?;
    let r = family.r;
    let fstar = random_girth_hypergraph(t, r, &rng.substream("fstar"))?;
    let h = &fstar.hypergraph;
    let mut graph = Graph::new(t);
    let mut placements = Vec::with_capacity(h.edge_count());
    for (i, e) in h.edges().iter().enumerate() {
        let mut place = e.clone();
        place.shuffle(&mut rng.substream(format!("place/{i}")));
        for (a, b) in family.gstar.edges() {
            if !graph.has_edge(place[a], place[b]) {
                graph.add_edge(place[a], place[b]);
            }
        }
        placements.push(place);
    }

    let mut c = Certificate::new("theorem4_part2");
    c.param("t4.G", g).param("t4.t", t).param("t4.r", r).param("t4.pair", [v, w]);
    c.seed("t4.rng", rng.seed());
    c.measure("t4.gplus", &family.gplus).measure("t4.gstar", &family.gstar);
    c.pass("t4.gplus.clones");
    c.measure_f64("t4.fstar.p", fstar.params.p);
    c.measure_f64("t4.fstar.delta", fstar.params.delta);
    c.measure("t4.fstar.sampled_edges", fstar.params.sampled_edges);
    c.measure("t4.fstar.surviving_edges", fstar.params.surviving_edges);
    for class in &fstar.params.pruning {
        c.measure(format!("t4.fstar.pruned.{}", class.length), class.removed_edges);
    }
    c.pass("t4.fstar.girth");
    c.measure("t4.placements", &placements);
    c.measure("t4.edges", graph.edge_count());

    let inc = h.incidence();
    let stray = graph.edges().into_iter().find(|&(a, b)| !inc[a].iter().any(|e| inc[b].contains(e)));
    match stray {
        None => c.pass("t4.edges_within_hyperedges"),
        Some((a, b)) => c.fail("t4.edges_within_hyperedges", Witness::Vertices(vec![a, b])),
    };
    record_free(&mut c, "t4.g_free", &graph, g, opts.budget)?;

    let sp = sprop_statistics(h, r, opts.sprop_samples, &rng.substream("sprop"))?;
    c.measure("t4.sprop.exhaustive", sp.exhaustive);
    c.measure("t4.sprop.sets", sp.sets_checked);
    c.measure("t4.sprop.passes", sp.passes);
    let calc = sunflower_calculator(t, r);
    c.measure_f64("sunflower.R", calc.big_r);
    c.measure_f64("sunflower.petals", calc.petals);
    c.measure_f64("sunflower.ln_T", calc.ln_t);
    c.measure_f64("sunflower.b", calc.b);
    Ok(Theorem4Part2 { family, fstar, graph, placements, certificate: c })
}

/// One build per nonadjacent pair, each from the substream `pair/{v}-{w}`.
pub fn theorem4_part2_all_pairs(
    g: &Graph,
    t: usize,
    rng: &SeededRng,
    opts: Theorem4Part2Options,
) -> Result<Vec<Theorem4Part2>> {
    let n = g.n();
    let mut out = Vec::new();
    for v in 0..n {
        for w in v + 1..n {
            if !g.has_edge(v, w) {
                let o = Theorem4Part2Options { pair: Some((v, w)), ..opts };
                out.push(theorem4_part2_build(g, t, &rng.substream(format!("pair/{v}-{w}")), o)?);
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy)]
pub struct Theorem4Part1Options {
    pub budget: Budget,
    pub measure_max_n: usize,
    pub measure_budget: Budget,
}

impl Default for Theorem4Part1Options {
    fn default() -> Self {
        Theorem4Part1Options {
            budget: Budget::nodes(50_000_000),
            measure_max_n: 96,
            measure_budget: Budget::nodes(2_000_000),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Theorem4Part1 {
    /// Left side `0..n`, right side `n..2n`.
    pub bipartite: Graph,
    pub cover: CliqueCover,
    pub graph: Graph,
    pub coloring: BlowupColoring,
    pub certificate: Certificate,
}

/// Configuration-model `d`-regular bipartite multigraph on `n + n`
/// vertices, kept edge by edge only when the edge closes no cycle of length
/// at most `girth_target`. Returns the graph and the counts of dropped
/// parallel edges and pruned short-cycle edges.
fn high_girth_bipartite(n: usize, d: usize, girth_target: usize, rng: &mut SeededRng) -> (Graph, usize, usize) {
    let mut right: Vec<usize> = (n..2 * n).flat_map(|y| std::iter::repeat_n(y, d)).collect();
    right.shuffle(rng);
    let mut g = Graph::new(2 * n);
    let (mut parallel, mut pruned) = (0, 0);
    let mut dist = vec![usize::MAX; 2 * n];
    for (i, &y) in right.iter().enumerate() {
        let x = i / d;
        if g.has_edge(x, y) {
            parallel += 1;
            continue;
        }
        // shortest x-y path below girth_target means the edge closes a short cycle
        dist.fill(usize::MAX);
        dist[x] = 0;
        let mut queue = std::collections::VecDeque::from([x]);
        let mut close = false;
        while let Some(u) = queue.pop_front() {
            if dist[u] + 1 >= girth_target {
                break;
            }
            for w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    if w == y {
                        close = true;
                    }
                    queue.push_back(w);
                }
            }
            if close {
                break;
            }
        }
        if close {
            pruned += 1;
        } else {
            g.add_edge(x, y);
        }
    }
    (g, parallel, pruned)
}

pub fn theorem4_part1_build(
    g: &Graph,
    f: &Graph,
    n: usize,
    d: usize,
    girth_target: usize,
    rng: &SeededRng,
    opts: Theorem4Part1Options,
) -> Result<Theorem4Part1> {
    if f.edge_count() == 0 {
        return Err(Error::invalid("F must have at least one edge"));
    }
    if !g.has_cycle() {
        return Err(Error::invalid("G is a forest; every blowup of F with an edge contains it"));
    }
    let hom = is_hom_free(f, g);
    if let Some(map) = hom.witness {
        return Err(Error::precondition("G maps homomorphically into F", Witness::Map(map)));
    }
    if girth_target < 4 {
        return Err(Error::invalid(format!("girth_target = {girth_target} must be at least 4")));
    }
    if n == 0 || d == 0 {
        return Err(Error::invalid("n and d must be positive"));
    }
    let (bipartite, parallel, pruned) = high_girth_bipartite(n, d, girth_target, &mut rng.substream("config"));
    let left = VertexSet::from_vertices(2 * n, 0..n)?;
    let cover = square_clique_cover(&bipartite, &left)?;
    let mut c = Certificate::new("theorem4_part1");
    c.param("t4p1.G", g).param("t4p1.F", f).param("t4p1.n", n).param("t4p1.d", d);
    c.param("t4p1.girth_target", girth_target);
    c.seed("t4p1.rng", rng.seed());
    c.pass("t4p1.f_hom_g_free");
    c.measure("t4p1.bipartite.edges", bipartite.edge_count());
    c.measure("t4p1.bipartite.parallel_dropped", parallel);
    c.measure("t4p1.bipartite.pruned", pruned);
    c.measure("t4p1.bipartite.min_degree", bipartite.min_degree());
    c.measure("t4p1.bipartite.max_degree", bipartite.max_degree());
    let girth = bipartite.girth();
    c.measure("t4p1.bipartite.girth", girth);
    match girth {
        Some(gi) if gi <= girth_target => c.fail("t4p1.bipartite.girth_exceeds_target", Witness::Vertices(vec![gi])),
        _ => c.pass("t4p1.bipartite.girth_exceeds_target"),
    };
    c.measure("t4p1.cliques", cover.cliques().len());
    let degenerate = cover.cliques().is_empty();
    c.measure("t4p1.degenerate", degenerate);
    let (graph, coloring) = if degenerate {
        let coloring = BlowupColoring {
            pattern: f.clone(),
            cliques: Vec::new(),
            colors: Vec::new(),
            seed: rng.seed(),
            label: rng.substream("blowup").label().to_string(),
        };
        (Graph::new(n), coloring)
    } else {
        random_blowup(&cover, f, &rng.substream("blowup"))?
    };
    c.measure("t4p1.edges", graph.edge_count());
    record_free(&mut c, "t4p1.g_free", &graph, g, opts.budget)?;
    let vf = f.n() as f64;
    let bound = 2.0 * n as f64 * vf * vf.ln() / d as f64;
    c.measure_f64("t4p1.f_free_bound", bound);
    if n <= opts.measure_max_n {
        let m = max_f_free_measure(&graph, f, opts.measure_budget)?;
        record_search(&mut c, "t4p1.max_f_free", &m);
    }
    Ok(Theorem4Part1 { bipartite, cover, graph, coloring, certificate: c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Verdict;
    use crate::graph::named::*;

    #[test]
    fn gplus_examples() {
        let fam = gplus_family(&cycle(5), 0, 2).unwrap();
        assert!(fam.gplus.has_edge(0, 3) && fam.gplus.has_edge(2, 4));
        assert_eq!(fam.gplus.edge_count(), 7);
        // {0,1,3,4} relabelled 0,1,2,3
        assert_eq!(fam.gstar.edges(), vec![(0, 1), (0, 2), (0, 3), (2, 3)]);
        assert_eq!(fam.gstarstar.edges(), vec![(1, 2)]);
        let fam = gplus_family(&Graph::new(2), 0, 1).unwrap();
        assert_eq!(fam.gplus.edge_count(), 0);
        let fam = gplus_family(&path(4), 0, 3).unwrap();
        assert!(fam.gplus.has_edge(0, 2) && fam.gplus.has_edge(1, 3));
        assert_eq!(fam.gplus.edge_count(), 5);
        assert!(gplus_family(&cycle(5), 0, 1).is_err());
    }

    #[test]
    fn girth_hypergraphs() {
        for (t, r) in [(40, 3), (30, 2), (30, 3)] {
            for seed in 0..4 {
                let gh = random_girth_hypergraph(t, r, &SeededRng::new(seed, "fstar")).unwrap();
                assert!(gh.hypergraph.check_girth_at_least(r + 2).is_pass());
                for class in &gh.params.pruning {
                    let mut seen = std::collections::BTreeSet::new();
                    for cyc in &class.cycles {
                        for e in cyc {
                            assert!(seen.insert(e.clone()), "cycles in a class share an edge");
                        }
                    }
                }
            }
        }
        assert!(random_girth_hypergraph(2, 3, &SeededRng::new(0, "x")).is_err());
        assert!(random_girth_hypergraph(10, 1, &SeededRng::new(0, "x")).is_err());
    }

    #[test]
    fn s_edge_counter() {
        let t = 10;
        for r in [2, 3] {
            let mut edges = Vec::new();
            let mut comb: Vec<usize> = (0..r).collect();
            loop {
                edges.push(comb.clone());
                let Some(i) = (0..r).rev().find(|&i| comb[i] < t - r + i) else { break };
                comb[i] += 1;
                for j in i + 1..r {
                    comb[j] = comb[j - 1] + 1;
                }
            }
            let h = Hypergraph::new(t, edges, Some(r)).unwrap();
            let s = VertexSet::from_vertices(t, 0..9).unwrap();
            assert_eq!(count_s_edges(&h, &s) as f64, binomial_f64(9, r - 1));
        }
        let empty = Hypergraph::new(12, vec![], Some(3)).unwrap();
        let rep = sprop_statistics(&empty, 3, 10, &SeededRng::new(0, "s")).unwrap();
        assert!(rep.exhaustive);
        assert!(rep.levels.iter().all(|l| l.max_count == 0));
    }

    #[test]
    fn part2_is_g_free() {
        for (g, t) in [(cycle(4), 30), (cycle(5), 40)] {
            for seed in 0..3 {
                let b = theorem4_part2_build(&g, t, &SeededRng::new(seed, "t4"), Default::default()).unwrap();
                let c = &b.certificate;
                assert_eq!(c.verdict("t4.g_free"), Some(Verdict::Pass));
                assert_eq!(c.verdict("t4.edges_within_hyperedges"), Some(Verdict::Pass));
                assert_eq!(b.graph.n(), t);
            }
        }
        assert!(theorem4_part2_build(&complete(4), 30, &SeededRng::new(0, "t4"), Default::default()).is_err());
        assert!(theorem4_part2_build(&path(4), 30, &SeededRng::new(0, "t4"), Default::default()).is_err());
    }

    #[test]
    fn part1_is_g_free() {
        let rng = SeededRng::new(3, "t4p1");
        let b = theorem4_part1_build(&cycle(5), &complete(2), 64, 3, 12, &rng, Default::default()).unwrap();
        let c = &b.certificate;
        assert_eq!(c.verdict("t4p1.g_free"), Some(Verdict::Pass));
        assert_eq!(c.verdict("t4p1.bipartite.girth_exceeds_target"), Some(Verdict::Pass));
        assert!(c.measurements.contains_key("t4p1.max_f_free.size"));
        let b = theorem4_part1_build(&cycle(5), &cycle(4), 64, 3, 12, &rng, Default::default()).unwrap();
        assert_eq!(b.certificate.verdict("t4p1.g_free"), Some(Verdict::Pass));
        // K3 maps onto C5? no; C5 maps into K3, so K3 is not hom(C5)-free
        assert!(theorem4_part1_build(&cycle(5), &complete(3), 64, 3, 12, &rng, Default::default()).is_err());
    }

    #[test]
    fn sunflower_bookkeeping() {
        let s = sunflower_calculator(30, 3);
        assert_eq!(s.big_r, 7.0);
        assert_eq!(s.petals, 7.0 * 406.0);
    }
}
