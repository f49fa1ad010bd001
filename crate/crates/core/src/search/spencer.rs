//! Sample-and-delete independent sets in uniform hypergraphs.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::rng::SeededRng;
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpencerResult {
    pub set: VertexSet,
    pub k: usize,
    /// Average degree `k|E|/n`.
    pub average_degree: f64,
    pub p: f64,
    /// `(1 - 1/k) n / d^{1/(k-1)}`; the expected size of one trial is at least this.
    pub bound: f64,
    pub trials: usize,
    /// Index of the trial that produced `set`.
    pub best_trial: usize,
    pub sizes: Vec<usize>,
}

fn uniformity(h: &Hypergraph) -> Result<usize> {
    let k = match h.uniformity() {
        Some(k) => k,
        None => {
            let k = h.edges().first().map_or(0, Vec::len);
            if h.edges().iter().any(|e| e.len() != k) {
                return Err(Error::invalid("hypergraph is not uniform"));
            }
            k
        }
    };
    Ok(k)
}

fn one_trial(h: &Hypergraph, p: f64, mut rng: SeededRng) -> VertexSet {
    let mut s = VertexSet::new(h.n());
    for v in 0..h.n() {
        if rng.gen_bool(p) {
            s.insert(v);
        }
    }
    for e in h.edges() {
        if e.iter().all(|&v| s.contains(v)) {
            s.remove(e[rng.gen_range(0..e.len())]);
        }
    }
    s
}

/// Best of `trials` independent sample-and-delete runs. Trial `i` draws from
/// the substream `trial/{i}`; ties go to the lexicographically least set.
pub fn spencer_independent_set(h: &Hypergraph, rng: &SeededRng, trials: usize) -> Result<SpencerResult> {
    let n = h.n();
    let m = h.edge_count();
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    if m == 0 {
        return Ok(SpencerResult {
            set: VertexSet::full(n),
            k: h.uniformity().unwrap_or(0),
            average_degree: 0.0,
            p: 1.0,
            bound: n as f64,
            trials: 0,
            best_trial: 0,
            sizes: Vec::new(),
        });
    }
    let k = uniformity(h)?;
    if k < 2 {
        return Err(Error::invalid("spencer_independent_set needs uniformity k >= 2"));
    }
    let kf = k as f64;
    let d = kf * m as f64 / n as f64;
    let p = (1.0 / d).powf(1.0 / (kf - 1.0)).min(1.0);
    let bound = (1.0 - 1.0 / kf) * n as f64 / d.powf(1.0 / (kf - 1.0));
    let sets: Vec<VertexSet> =
        (0..trials).into_par_iter().map(|i| one_trial(h, p, rng.substream(format!("trial/{i}")))).collect();
    let mut best = 0;
    for i in 1..trials {
        let (a, b) = (&sets[i], &sets[best]);
        if a.len() > b.len() || (a.len() == b.len() && a.to_vec() < b.to_vec()) {
            best = i;
        }
    }
    for s in &sets {
        if !h.is_independent(s) {
            return Err(Error::ValidationFault("sample-and-delete produced a set containing an edge".into()));
        }
    }
    let sizes = sets.iter().map(VertexSet::len).collect();
    Ok(SpencerResult { set: sets[best].clone(), k, average_degree: d, p, bound, trials, best_trial: best, sizes })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_edge_drops_one_vertex() {
        let h = Hypergraph::new(4, vec![vec![0, 1, 2, 3]], Some(4)).unwrap();
        let r = spencer_independent_set(&h, &SeededRng::new(1, "t"), 10).unwrap();
        assert_eq!(r.set.len(), 3);
        assert!((r.bound - 3.0).abs() < 1e-12);
    }

    #[test]
    fn complete_graph_gives_one_vertex() {
        let n = 7;
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| vec![u, v])).collect();
        let h = Hypergraph::new(n, edges, Some(2)).unwrap();
        let r = spencer_independent_set(&h, &SeededRng::new(5, "t"), 30).unwrap();
        assert_eq!(r.set.len(), 1);
        assert!(r.bound <= 1.0);
    }

    #[test]
    fn empty_hypergraph_returns_everything() {
        let h = Hypergraph::new(5, vec![], Some(3)).unwrap();
        let r = spencer_independent_set(&h, &SeededRng::new(0, "t"), 3).unwrap();
        assert_eq!(r.set.len(), 5);
    }

    #[test]
    fn same_seed_same_answer() {
        let h = Hypergraph::new(6, vec![vec![0, 1, 2], vec![2, 3, 4], vec![1, 4, 5]], Some(3)).unwrap();
        let a = spencer_independent_set(&h, &SeededRng::new(9, "t"), 20).unwrap();
        let b = spencer_independent_set(&h, &SeededRng::new(9, "t"), 20).unwrap();
        assert_eq!(a, b);
        assert!(h.is_independent(&a.set));
    }
}
