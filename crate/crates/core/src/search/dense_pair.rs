//! Dyadic refinement of the cycles through a vertex into a dense pair.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::cycles::list_k_cycles_through;

/// Ordered pairs `(x, y) ∈ X × Y` with `xy` an edge. Equals the plain edge
/// count whenever X and Y are disjoint.
pub fn edges_between(g: &Graph, x: &VertexSet, y: &VertexSet) -> u64 {
    x.iter().map(|v| g.row(v).iter().zip(y.words()).map(|(a, b)| (a & b).count_ones() as u64).sum::<u64>()).sum()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LevelTrace {
    pub level: usize,
    /// Chosen bucket: neighbour counts in `[d/2^{j+1}, d/2^j]`.
    pub bucket: usize,
    pub lo: f64,
    pub hi: f64,
    /// Surviving cycles per bucket index.
    pub bucket_cycles: Vec<usize>,
    pub cycles_kept: usize,
    pub set: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DensePair {
    pub v0: usize,
    pub k: usize,
    pub d: usize,
    pub x: VertexSet,
    pub y: VertexSet,
    pub edges: u64,
    pub gamma: f64,
    /// `cycles / d^{k-1}`.
    pub delta: f64,
    pub cycles_total: usize,
    pub cycles_kept: usize,
    pub x1: Vec<usize>,
    pub trace: Vec<LevelTrace>,
    /// `δ / (2 log₂ d)^k`, the density promised by the lemma statement.
    pub statement_density: f64,
    /// `δ / (2^{k-1} (log₂ d)^{k-3})`, the density derived in its proof.
    pub proof_density: f64,
    /// `δ d / (log₂ d)^{k-3}`.
    pub size_bound: f64,
    pub statement_density_holds: bool,
    pub proof_density_holds: bool,
    pub size_holds: bool,
}

fn bucket_of(a: usize, d: usize, top: usize) -> usize {
    // smallest j with d/2^{j+1} <= a <= d/2^j
    (0..=top)
        .find(|&j| (a as f64) * 2f64.powi(j as i32 + 1) >= d as f64 && (a as f64) * 2f64.powi(j as i32) <= d as f64)
        .expect("1 <= a <= d always lands in a bucket")
}

/// Refines the k-cycles through `v0` level by level and returns the pair
/// `X = X'_{k-2}`, `Y = X'_{k-1}`. The paper-style bounds are reported as
/// flags rather than asserted.
pub fn ckprop_dense_pair(g: &Graph, v0: usize, k: usize) -> Result<DensePair> {
    let cycles = list_k_cycles_through(g, v0, k, None)?;
    let d = g.max_degree();
    if d < 2 {
        return Err(Error::invalid("maximum degree must be at least 2"));
    }
    if cycles.is_empty() {
        return Err(Error::invalid(format!("no {k}-cycle through vertex {v0}")));
    }
    let n = g.n();
    let top = d.ilog2() as usize;
    let level_set =
        |alive: &[usize], i: usize| VertexSet::from_vertices(n, alive.iter().map(|&c| cycles[c][i])).expect("in range");
    let mut alive: Vec<usize> = (0..cycles.len()).collect();
    let mut prev = level_set(&alive, 1);
    let x1 = prev.to_vec();
    let mut trace = Vec::new();
    for i in 2..=k - 2 {
        let xi = level_set(&alive, i);
        let mut bucket = vec![usize::MAX; n];
        for u in xi.iter() {
            let a = g.neighborhood(u).intersection(&prev).len();
            bucket[u] = bucket_of(a, d, top);
        }
        let mut per = vec![0usize; top + 1];
        for &c in &alive {
            per[bucket[cycles[c][i]]] += 1;
        }
        let j = (0..=top).max_by_key(|&j| (per[j], std::cmp::Reverse(j))).expect("non-empty");
        let chosen = VertexSet::from_vertices(n, xi.iter().filter(|&u| bucket[u] == j)).expect("in range");
        alive.retain(|&c| chosen.contains(cycles[c][i]));
        let (lo, hi) = (d as f64 / 2f64.powi(j as i32 + 1), d as f64 / 2f64.powi(j as i32));
        // every vertex of X'_i has between a_i/2 and a_i neighbours in X'_{i-1}
        for u in chosen.iter() {
            let a = g.neighborhood(u).intersection(&prev).len() as f64;
            if a < lo || a > hi {
                return Err(Error::ValidationFault(format!(
                    "level {i} vertex {u} has {a} neighbours outside [{lo}, {hi}]"
                )));
            }
        }
        trace.push(LevelTrace {
            level: i,
            bucket: j,
            lo,
            hi,
            bucket_cycles: per,
            cycles_kept: alive.len(),
            set: chosen.to_vec(),
        });
        prev = chosen;
    }
    let x = prev;
    let y = level_set(&alive, k - 1);
    let edges = edges_between(g, &x, &y);
    // each surviving cycle contributes its own (σ_{k-2}, σ_{k-1}) edge
    if edges == 0 {
        return Err(Error::ValidationFault("dense pair has no edges".into()));
    }
    let gamma = edges as f64 / (x.len() * y.len()) as f64;
    let delta = cycles.len() as f64 / (d as f64).powi(k as i32 - 1);
    let lg = (d as f64).log2();
    let statement_density = delta / (2.0 * lg).powi(k as i32);
    let proof_density = delta / (2f64.powi(k as i32 - 1) * lg.powi(k as i32 - 3));
    let size_bound = delta * d as f64 / lg.powi(k as i32 - 3);
    let min_side = x.len().min(y.len()) as f64;
    Ok(DensePair {
        v0,
        k,
        d,
        edges,
        gamma,
        delta,
        cycles_total: cycles.len(),
        cycles_kept: alive.len(),
        x1,
        trace,
        statement_density,
        proof_density,
        size_bound,
        statement_density_holds: gamma >= statement_density,
        proof_density_holds: gamma >= proof_density,
        size_holds: min_side >= size_bound,
        x,
        y,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn triangle_chain_in_k4() {
        let p = ckprop_dense_pair(&complete(4), 0, 3).unwrap();
        assert!(p.trace.is_empty());
        assert_eq!(p.x.to_vec(), vec![1, 2]);
        assert_eq!(p.y.to_vec(), vec![2, 3]);
        assert!(p.edges > 0);
        assert_eq!(p.edges, edges_between(&complete(4), &p.x, &p.y));
    }

    #[test]
    fn complete_tripartite_has_density_one() {
        let g = complete_multipartite(&[3, 3, 3]);
        let p = ckprop_dense_pair(&g, 0, 3).unwrap();
        assert_eq!(p.x.to_vec(), vec![3, 4, 5]);
        assert_eq!(p.y.to_vec(), vec![6, 7, 8]);
        assert_eq!(p.gamma, 1.0);
        assert!(p.statement_density_holds && p.proof_density_holds);
    }

    #[test]
    fn single_cycle_gives_singletons() {
        let g = cycle(7);
        let p = ckprop_dense_pair(&g, 0, 7).unwrap();
        assert_eq!(p.cycles_total, 1);
        assert_eq!((p.x.len(), p.y.len(), p.edges), (1, 1, 1));
        assert_eq!(p.trace.len(), 4);
    }

    #[test]
    fn buckets_cover_every_count() {
        for d in 2usize..40 {
            let top = d.ilog2() as usize;
            for a in 1..=d {
                let j = bucket_of(a, d, top);
                assert!((a as f64) >= d as f64 / 2f64.powi(j as i32 + 1));
                assert!((a as f64) <= d as f64 / 2f64.powi(j as i32));
            }
        }
    }

    #[test]
    fn errors_without_cycles() {
        assert!(ckprop_dense_pair(&path(5), 0, 3).is_err());
        assert!(ckprop_dense_pair(&complete(2), 0, 3).is_err());
    }
}
