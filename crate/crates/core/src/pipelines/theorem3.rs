//! Large C_k-free subsets of K4-free graphs, and the reduction from
//! K_s-free graphs by descending into neighbourhoods.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::error::{Error, Result, Witness};
use crate::graph::Graph;
use crate::hypergraph::Hypergraph;
use crate::rng::SeededRng;
use crate::search::{
    ckprop_dense_pair, cycle_counts_per_vertex, dependent_random_choice, edges_between, find_k_cycle_within,
    greedy_independent_set, list_k_cycles, max_independent_set, spencer_independent_set,
};
use crate::subgraph::Budget;
use crate::vertex_set::VertexSet;

use super::record_search;

#[derive(Debug, Clone, Copy)]
pub struct CkFreeOptions {
    pub spencer_trials: usize,
    pub drc_retries: usize,
    /// Budget for the independent-set search inside a neighbourhood.
    pub budget: Budget,
}

impl Default for CkFreeOptions {
    fn default() -> Self {
        CkFreeOptions { spencer_trials: 50, drc_retries: 20, budget: Budget::nodes(1_000_000) }
    }
}

#[derive(Debug, Clone)]
pub struct CkFreeResult {
    pub set: VertexSet,
    /// Which degree regime applied: `turan`, `neighborhood` or `middle`.
    pub branch: String,
    /// Which candidate produced `set`.
    pub winner: String,
    pub certificate: Certificate,
}

/// `1/(100(k-1))`.
fn epsilon(k: usize) -> f64 {
    1.0 / (100.0 * (k as f64 - 1.0))
}

fn first_max_degree_vertex(g: &Graph) -> usize {
    let d = g.max_degree();
    (0..g.n()).find(|&v| g.degree(v) == d).expect("non-empty graph")
}

/// Maximum independent set of `g[N(v)]`, in `g`'s labels.
fn neighborhood_mis(g: &Graph, v: usize, budget: Budget, c: &mut Certificate, prefix: &str) -> Result<VertexSet> {
    let nb = g.neighborhood(v);
    let members = nb.to_vec();
    let sub = g.induced_subgraph(&nb)?;
    let r = max_independent_set(&sub, budget);
    record_search(c, prefix, &r);
    VertexSet::from_vertices(g.n(), r.set.iter().map(|i| members[i]))
}

pub fn ckfree_subset(g: &Graph, k: usize, rng: &SeededRng, opts: CkFreeOptions) -> Result<CkFreeResult> {
    if k < 3 {
        return Err(Error::invalid(format!("cycle length k = {k} must be at least 3")));
    }
    if let Some(q) = g.find_clique(4) {
        return Err(Error::precondition("graph contains K4", Witness::Vertices(q)));
    }
    let n = g.n();
    let mut c = Certificate::new("ckfree");
    c.param("ckfree.k", k).param("ckfree.n", n);
    c.seed("ckfree.rng", rng.seed());
    c.pass("ckfree.k4_free");
    let d = g.max_degree();
    let eps = epsilon(k);
    let nf = n as f64;
    let lo = nf.powf(2.0 / 3.0 - eps);
    let hi = nf.powf(2.0 / 3.0 + 2.0 * eps);
    c.measure("ckfree.d", d);
    c.measure_f64("ckfree.epsilon_k", eps);
    c.measure_f64("ckfree.low_threshold", lo);
    c.measure_f64("ckfree.high_threshold", hi);

    let floor = n.div_ceil(d + 1);
    let turan = greedy_independent_set(g);
    c.measure("ckfree.turan_floor", floor);
    c.measure("ckfree.turan_size", turan.len());
    // candidates in priority order; ties keep the earlier one
    let mut candidates: Vec<(&str, VertexSet)> = Vec::new();
    if n > 0 && find_k_cycle_within(g, &VertexSet::full(n), k)?.is_none() {
        candidates.push(("whole", VertexSet::full(n)));
    }
    let branch = if n == 0 || (d as f64) <= lo {
        "turan"
    } else if (d as f64) >= hi {
        let v = first_max_degree_vertex(g);
        c.measure("ckfree.neighborhood.vertex", v);
        candidates.push(("neighborhood_mis", neighborhood_mis(g, v, opts.budget, &mut c, "ckfree.neighborhood.mis")?));
        "neighborhood"
    } else {
        middle_branch(g, k, d, rng, opts, &mut c, &mut candidates)?;
        "middle"
    };
    candidates.push(("turan", turan));

    let mut best = 0;
    for (i, (_, s)) in candidates.iter().enumerate() {
        c.measure(format!("ckfree.candidate.{}", candidates[i].0), s.len());
        if s.len() > candidates[best].1.len() {
            best = i;
        }
    }
    let (winner, set) = candidates.swap_remove(best);
    if let Some(cyc) = find_k_cycle_within(g, &set, k)? {
        return Err(Error::ValidationFault(format!("ckfree output contains the {k}-cycle {cyc:?}")));
    }
    if set.len() < floor {
        return Err(Error::ValidationFault(format!("ckfree output {} below the floor {floor}", set.len())));
    }
    c.pass("ckfree.ck_free");
    c.pass("ckfree.turan_floor");
    c.measure("ckfree.branch", branch);
    c.measure("ckfree.winner", winner);
    c.measure("ckfree.size", set.len());
    c.measure("ckfree.set", set.to_vec());
    Ok(CkFreeResult { set, branch: branch.into(), winner: winner.into(), certificate: c })
}

fn middle_branch(
    g: &Graph,
    k: usize,
    d: usize,
    rng: &SeededRng,
    opts: CkFreeOptions,
    c: &mut Certificate,
    candidates: &mut Vec<(&'static str, VertexSet)>,
) -> Result<()> {
    let n = g.n();
    let counts = cycle_counts_per_vertex(g, k)?;
    let most = counts.iter().copied().max().unwrap_or(0);
    let delta = most as f64 / (d as f64).powi(k as i32 - 1);
    c.measure("ckfree.max_cycles_through_vertex", most);
    c.measure_f64("ckfree.delta", delta);
    if most == 0 {
        return Ok(());
    }

    // Bound 1: independent sets of the hypergraph of k-cycle vertex sets
    let sets: BTreeSet<Vec<usize>> = list_k_cycles(g, k, None)?
        .into_iter()
        .map(|mut cyc| {
            cyc.sort_unstable();
            cyc
        })
        .collect();
    let h = Hypergraph::new(n, sets.into_iter().collect(), Some(k))?;
    c.measure("ckfree.bound1.hyperedges", h.edge_count());
    let sp = spencer_independent_set(&h, &rng.substream("spencer"), opts.spencer_trials)?;
    c.measure_f64("ckfree.bound1.lemma_bound", sp.bound);
    c.measure("ckfree.bound1.size", sp.set.len());
    candidates.push(("bound1_spencer", sp.set));

    // Bound 2 only past the density cutoff
    let cutoff = (n as f64).powf(-1.0 / 25.0);
    c.measure_f64("ckfree.bound2.delta_cutoff", cutoff);
    if delta < cutoff {
        c.measure("ckfree.bound2.ran", false);
        return Ok(());
    }
    c.measure("ckfree.bound2.ran", true);
    let v0 = (0..n).find(|&v| counts[v] == most).expect("max exists");
    let pair = ckprop_dense_pair(g, v0, k)?;
    c.measure("ckfree.bound2.v0", v0);
    c.measure("ckfree.bound2.pair.x", pair.x.len());
    c.measure("ckfree.bound2.pair.y", pair.y.len());
    c.measure_f64("ckfree.bound2.pair.gamma", pair.gamma);
    c.measure_f64("ckfree.bound2.pair.statement_density", pair.statement_density);
    c.measure_f64("ckfree.bound2.pair.proof_density", pair.proof_density);
    c.measure("ckfree.bound2.pair.statement_density_holds", pair.statement_density_holds);
    c.measure("ckfree.bound2.pair.proof_density_holds", pair.proof_density_holds);
    c.measure("ckfree.bound2.pair.size_holds", pair.size_holds);

    // dependent random choice needs disjoint sides
    let y_minus = pair.y.difference(&pair.x);
    let x_minus = pair.x.difference(&pair.y);
    let (x, y, how) = if !y_minus.is_empty() && edges_between(g, &pair.x, &y_minus) > 0 {
        (pair.x.clone(), y_minus, "y_minus_x")
    } else if !x_minus.is_empty() && edges_between(g, &x_minus, &pair.y) > 0 {
        (x_minus, pair.y.clone(), "x_minus_y")
    } else {
        c.measure("ckfree.bound2.disjoint", "none");
        return Ok(());
    };
    c.measure("ckfree.bound2.disjoint", how);
    let drc = dependent_random_choice(g, &x, &y, 3, &rng.substream("drc"), opts.drc_retries)?;
    c.measure("ckfree.bound2.drc.z", drc.z.len());
    c.measure("ckfree.bound2.drc.status", drc.status);
    c.measure_f64("ckfree.bound2.drc.gamma", drc.gamma);
    c.measure_f64("ckfree.bound2.drc.pair_threshold", drc.pair_threshold);
    let first_edge = drc.z.iter().find_map(|u| g.neighbors(u).find(|&w| w > u && drc.z.contains(w)).map(|w| (u, w)));
    match first_edge {
        None => candidates.push(("bound2_z", drc.z)),
        Some((u, w)) => {
            // in a K4-free graph the common neighbourhood of an edge is independent
            let common = g.neighborhood(u).intersection(&g.neighborhood(w));
            if !g.is_independent(&common) {
                return Err(Error::ValidationFault("common neighbourhood of an edge is not independent".into()));
            }
            c.measure("ckfree.bound2.edge", [u, w]);
            candidates.push(("bound2_common_neighborhood", common));
        }
    }
    Ok(())
}

/// `α_k(4) = 1/3 + ε_k`, `α_k(s) = 1 - 1/(1 + α_k(s-1))`.
pub fn alpha_k(k: usize, s: usize) -> f64 {
    let mut a = 1.0 / 3.0 + epsilon(k);
    for _ in 5..=s {
        a = 1.0 - 1.0 / (1.0 + a);
    }
    a
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KsFreeStep {
    pub s: usize,
    pub n: usize,
    pub d: usize,
    /// The vertex (in the original labels) whose neighbourhood was entered.
    pub descended_into: Option<usize>,
    pub action: String,
    pub turan_size: usize,
    pub result_size: usize,
}

#[derive(Debug, Clone)]
pub struct KsFreeResult {
    pub set: VertexSet,
    pub trace: Vec<KsFreeStep>,
    pub certificate: Certificate,
}

/// A C_k-free subset of a K_s-free graph: the better of a Turán set and the
/// recursive answer inside a maximum-degree neighbourhood, bottoming out in
/// [`ckfree_subset`] once the graph is K4-free.
pub fn ksfree_recursion(g: &Graph, s: usize, k: usize, rng: &SeededRng, opts: CkFreeOptions) -> Result<KsFreeResult> {
    if s < 4 {
        return Err(Error::invalid(format!("s = {s} must be at least 4")));
    }
    if k < 3 {
        return Err(Error::invalid(format!("cycle length k = {k} must be at least 3")));
    }
    if let Some(q) = g.find_clique(s) {
        return Err(Error::precondition(format!("graph contains K{s}"), Witness::Vertices(q)));
    }
    let mut c = Certificate::new("ksfree");
    c.param("ksfree.s", s).param("ksfree.k", k).param("ksfree.n", g.n());
    c.seed("ksfree.rng", rng.seed());
    c.pass("ksfree.ks_free");
    let mut trace = Vec::new();
    let labels: Vec<usize> = (0..g.n()).collect();
    let local = descend(g, &labels, s, k, rng, opts, &mut trace, &mut c)?;
    let set = VertexSet::from_vertices(g.n(), local)?;
    if let Some(cyc) = find_k_cycle_within(g, &set, k)? {
        return Err(Error::ValidationFault(format!("ksfree output contains the {k}-cycle {cyc:?}")));
    }
    c.pass("ksfree.ck_free");
    for t in 4..=s {
        c.measure_f64(format!("ksfree.alpha_k.{t}"), alpha_k(k, t));
    }
    c.measure("ksfree.trace", &trace);
    c.measure("ksfree.size", set.len());
    c.measure("ksfree.set", set.to_vec());
    Ok(KsFreeResult { set, trace, certificate: c })
}

#[allow(clippy::too_many_arguments)]
fn descend(
    g: &Graph,
    labels: &[usize],
    s: usize,
    k: usize,
    rng: &SeededRng,
    opts: CkFreeOptions,
    trace: &mut Vec<KsFreeStep>,
    c: &mut Certificate,
) -> Result<Vec<usize>> {
    let n = g.n();
    let d = g.max_degree();
    let mut step = KsFreeStep { s, n, d, descended_into: None, action: String::new(), turan_size: 0, result_size: 0 };
    if s == 4 {
        let r = ckfree_subset(g, k, &rng.substream("ckfree"), opts)?;
        c.absorb(&format!("ksfree.base{}", trace.len()), &r.certificate);
        step.action = format!("ckfree:{}", r.winner);
        step.result_size = r.set.len();
        trace.push(step);
        return Ok(r.set.iter().map(|v| labels[v]).collect());
    }
    if n == 0 || g.find_clique(s - 1).is_none() {
        step.action = format!("already K{}-free", s - 1);
        trace.push(step);
        let idx = trace.len() - 1;
        let out = descend(g, labels, s - 1, k, rng, opts, trace, c)?;
        trace[idx].result_size = out.len();
        return Ok(out);
    }
    let turan = greedy_independent_set(g);
    let v = first_max_degree_vertex(g);
    let nb = g.neighborhood(v);
    let sub = g.induced_subgraph(&nb)?;
    let sub_labels: Vec<usize> = nb.iter().map(|u| labels[u]).collect();
    step.descended_into = Some(labels[v]);
    step.turan_size = turan.len();
    trace.push(step);
    let idx = trace.len() - 1;
    let inner = descend(&sub, &sub_labels, s - 1, k, &rng.substream(format!("level{s}")), opts, trace, c)?;
    let (action, out) = if inner.len() > turan.len() {
        ("neighborhood", inner)
    } else {
        ("turan", turan.iter().map(|u| labels[u]).collect())
    };
    trace[idx].action = action.into();
    trace[idx].result_size = out.len();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    fn run(g: &Graph, k: usize) -> CkFreeResult {
        ckfree_subset(g, k, &SeededRng::new(1, "ck"), CkFreeOptions::default()).unwrap()
    }

    #[test]
    fn ckfree_examples() {
        let r = run(&cycle(7), 3);
        assert_eq!(r.set.len(), 7);
        assert_eq!(r.winner, "whole");
        let r = run(&petersen(), 5);
        assert!(r.set.len() >= 3);
        let r = run(&complete_bipartite(20, 20), 4);
        assert!(r.set.len() >= 20);
        assert_eq!(r.branch, "neighborhood");
    }

    #[test]
    fn rejects_k4() {
        let e = ckfree_subset(&complete(4), 3, &SeededRng::new(0, "ck"), CkFreeOptions::default());
        assert!(matches!(e, Err(Error::Precondition { .. })));
    }

    #[test]
    fn middle_branch_on_a_circulant() {
        // n = 8, d = 4 lies strictly between n^{2/3-ε} and n^{2/3+2ε}
        let g = circulant(8, &[1, 2]);
        assert!(g.find_clique(4).is_none());
        for k in [3, 4, 5] {
            let r = run(&g, k);
            assert_eq!(r.branch, "middle");
            assert!(find_k_cycle_within(&g, &r.set, k).unwrap().is_none());
            assert!(r.set.len() >= 2);
        }
    }

    #[test]
    fn ksfree_examples() {
        let opts = CkFreeOptions::default();
        let r = ksfree_recursion(&cycle(5), 5, 3, &SeededRng::new(0, "ks"), opts).unwrap();
        assert_eq!(r.trace[0].action, "already K4-free");
        let g = complete_multipartite(&[5, 5, 5, 5]);
        let r = ksfree_recursion(&g, 5, 3, &SeededRng::new(0, "ks"), opts).unwrap();
        assert!(r.set.len() >= 5);
        assert!(r.trace[0].descended_into.is_some());
        let g = cycle(5).blowup(4);
        let r = ksfree_recursion(&g, 6, 4, &SeededRng::new(0, "ks"), opts).unwrap();
        assert!(find_k_cycle_within(&g, &r.set, 4).unwrap().is_none());
        assert!(ksfree_recursion(&complete(5), 5, 3, &SeededRng::new(0, "ks"), opts).is_err());
    }

    #[test]
    fn alpha_recursion() {
        assert!((alpha_k(3, 4) - (1.0 / 3.0 + 1.0 / 200.0)).abs() < 1e-15);
        for s in 5..10 {
            assert!(alpha_k(3, s) > 1.0 / (s as f64 - 1.0));
        }
    }
}
