//! Dependent random choice on a bipartite pair `(X, Y)`.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result, Witness};
use crate::graph::Graph;
use crate::rng::SeededRng;
use crate::vertex_set::VertexSet;

use super::dense_pair::edges_between;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DrcStatus {
    TargetMet,
    TargetMissed,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DrcResult {
    pub z: VertexSet,
    pub status: DrcStatus,
    pub s: usize,
    pub edges: u64,
    /// Measured density `e(X,Y) / (|X||Y|)`.
    pub gamma: f64,
    /// Common neighbours in X that every pair of Z must have: `γ|X||Y|^{-1/s}`.
    pub pair_threshold: f64,
    /// `½ γ^s |Y|`.
    pub size_target: f64,
    /// Smallest common-neighbour count over pairs of Z (None if |Z| < 2).
    pub min_pair_common: Option<usize>,
    pub retries: usize,
    pub best_retry: usize,
}

fn common_in(g: &Graph, x: &VertexSet, u: usize, v: usize) -> usize {
    g.row(u).iter().zip(g.row(v)).zip(x.words()).map(|((a, b), c)| (a & b & c).count_ones() as usize).sum()
}

fn one_retry(g: &Graph, x: &[usize], xs: &VertexSet, y: &VertexSet, s: usize, m: f64, mut rng: SeededRng) -> VertexSet {
    let mut a = y.clone();
    for _ in 0..s {
        let t = x[rng.gen_range(0..x.len())];
        a = a.intersection(&g.neighborhood(t));
    }
    // clean bad pairs: drop the vertex in the most bad pairs, ties to the smaller index
    let members = a.to_vec();
    let mut bad: Vec<Vec<usize>> = vec![Vec::new(); members.len()];
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if (common_in(g, xs, members[i], members[j]) as f64) < m {
                bad[i].push(j);
                bad[j].push(i);
            }
        }
    }
    let mut alive = vec![true; members.len()];
    let mut load: Vec<usize> = bad.iter().map(Vec::len).collect();
    loop {
        let worst =
            (0..members.len()).filter(|&i| alive[i] && load[i] > 0).max_by_key(|&i| (load[i], std::cmp::Reverse(i)));
        let Some(w) = worst else { break };
        alive[w] = false;
        a.remove(members[w]);
        for &j in &bad[w] {
            if alive[j] {
                load[j] -= 1;
            }
        }
    }
    a
}

/// Finds `Z ⊆ Y` whose pairs all have at least `γ|X||Y|^{-1/s}` common
/// neighbours in X, aiming for `|Z| ≥ ½γ^s|Y|`. Retry `i` uses the substream
/// `retry/{i}`; the largest Z wins, ties to the earliest retry. The pair
/// condition is audited exhaustively before returning.
pub fn dependent_random_choice(
    g: &Graph,
    x: &VertexSet,
    y: &VertexSet,
    s: usize,
    rng: &SeededRng,
    retries: usize,
) -> Result<DrcResult> {
    if x.universe() != g.n() || y.universe() != g.n() {
        return Err(Error::invalid("vertex set universe does not match graph"));
    }
    if !x.is_disjoint(y) {
        return Err(Error::precondition("X and Y must be disjoint", Witness::Vertices(x.intersection(y).to_vec())));
    }
    if s == 0 {
        return Err(Error::invalid("s must be at least 1"));
    }
    if retries == 0 {
        return Err(Error::invalid("retries must be at least 1"));
    }
    let edges = edges_between(g, x, y);
    if edges == 0 {
        return Err(Error::invalid("e(X, Y) must be at least 1"));
    }
    let (nx, ny) = (x.len() as f64, y.len() as f64);
    let gamma = edges as f64 / (nx * ny);
    let m = gamma * nx * ny.powf(-1.0 / s as f64);
    let target = 0.5 * gamma.powi(s as i32) * ny;
    let xv = x.to_vec();
    let zs: Vec<VertexSet> = (0..retries)
        .into_par_iter()
        .map(|i| one_retry(g, &xv, x, y, s, m, rng.substream(format!("retry/{i}"))))
        .collect();
    let mut best = 0;
    for i in 1..retries {
        if zs[i].len() > zs[best].len() {
            best = i;
        }
    }
    let z = zs[best].clone();
    let members = z.to_vec();
    let mut min_pair = None::<usize>;
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let c = common_in(g, x, u, v);
            if (c as f64) < m {
                return Err(Error::ValidationFault(format!(
                    "dependent random choice pair ({u}, {v}) has {c} common neighbours, needs {m}"
                )));
            }
            min_pair = Some(min_pair.map_or(c, |p| p.min(c)));
        }
    }
    if !z.is_subset(y) {
        return Err(Error::ValidationFault("dependent random choice left Y".into()));
    }
    let status = if z.len() as f64 >= target { DrcStatus::TargetMet } else { DrcStatus::TargetMissed };
    Ok(DrcResult {
        z,
        status,
        s,
        edges,
        gamma,
        pair_threshold: m,
        size_target: target,
        min_pair_common: min_pair,
        retries,
        best_retry: best,
    })
}
