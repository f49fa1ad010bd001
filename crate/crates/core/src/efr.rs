//! Sphere-point progressions: a linear, triangle-free, `R`-partite
//! `R`-uniform hypergraph with `|A|·r^d` edges.

use serde::{Deserialize, Serialize};

use crate::certificate::Certificate;
use crate::error::{Error, Result};
use crate::hypergraph::{Audit, Hypergraph};

/// All `x ∈ Z^d` with every `x_i ≥ 1` and `Σ x_i² = r²`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpherePointSet {
    pub d: usize,
    pub r: u64,
    pub points: Vec<Vec<u64>>,
}

impl SpherePointSet {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

pub fn sphere_points(d: usize, r: u64) -> Result<SpherePointSet> {
    if d == 0 || r == 0 {
        return Err(Error::invalid(format!("sphere points need d >= 1 and r >= 1, got d = {d}, r = {r}")));
    }
    let mut points = Vec::new();
    let mut cur = Vec::with_capacity(d);
    fill(d, r * r, &mut cur, &mut points);
    Ok(SpherePointSet { d, r, points })
}

fn fill(d: usize, rest: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    let left = d - cur.len();
    if left == 1 {
        let x = rest.isqrt();
        if x >= 1 && x * x == rest {
            cur.push(x);
            out.push(cur.clone());
            cur.pop();
        }
        return;
    }
    // the remaining coordinates each need at least 1
    let mut x = 1;
    while x * x + (left as u64 - 1) <= rest {
        cur.push(x);
        fill(d, rest - x * x, cur, out);
        cur.pop();
        x += 1;
    }
}

/// The constructed hypergraph with its parts.
///
/// Part `X_i` (`i = 1..=R`) is the grid `[i·r]^d`. Its points are numbered
/// from `offsets[i-1]` in mixed radix, first coordinate least significant;
/// this dense labelling is what [`EfrInstance::label`] inverts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EfrInstance {
    pub d: usize,
    pub r: u64,
    pub big_r: usize,
    /// `|X_i| = (i·r)^d`.
    pub parts: Vec<u64>,
    pub offsets: Vec<u64>,
    pub declared_n: u64,
    /// `|A|`, the number of sphere points used as common differences.
    pub a_size: usize,
    pub hypergraph: Hypergraph,
}

/// Largest declared vertex count the builder will materialise.
const MAX_DECLARED_N: u64 = 50_000_000;

fn part_layout(d: usize, r: u64, big_r: usize) -> Result<(Vec<u64>, Vec<u64>, u64)> {
    let too_big = || Error::invalid("EFR parameters overflow the vertex budget");
    let mut parts = Vec::with_capacity(big_r);
    let mut offsets = Vec::with_capacity(big_r);
    let mut total: u64 = 0;
    for i in 1..=big_r as u64 {
        let side = i.checked_mul(r).ok_or_else(too_big)?;
        let size = side.checked_pow(d as u32).ok_or_else(too_big)?;
        offsets.push(total);
        parts.push(size);
        total = total.checked_add(size).ok_or_else(too_big)?;
    }
    Ok((parts, offsets, total))
}

impl EfrInstance {
    /// Wraps an arbitrary hypergraph with the part layout of `(d, r, R)`,
    /// without checking it. Used to audit hand-built instances.
    pub fn wrap(d: usize, r: u64, big_r: usize, hypergraph: Hypergraph) -> Result<Self> {
        let (parts, offsets, declared_n) = part_layout(d, r, big_r)?;
        if hypergraph.n() as u64 != declared_n {
            return Err(Error::invalid(format!(
                "hypergraph has {} vertices, layout declares {declared_n}",
                hypergraph.n()
            )));
        }
        let a_size = sphere_points(d, r)?.len();
        Ok(EfrInstance { d, r, big_r, parts, offsets, declared_n, a_size, hypergraph })
    }

    /// Part index (1-based) of a vertex.
    pub fn part_of(&self, v: usize) -> usize {
        self.offsets.partition_point(|&o| o <= v as u64)
    }

    /// `(part, point)` for a dense vertex id.
    pub fn label(&self, v: usize) -> (usize, Vec<u64>) {
        let i = self.part_of(v);
        let side = i as u64 * self.r;
        let mut rest = v as u64 - self.offsets[i - 1];
        let point = (0..self.d)
            .map(|_| {
                let c = rest % side + 1;
                rest /= side;
                c
            })
            .collect();
        (i, point)
    }

    /// Every edge lists one vertex per part, the `i`-th in `X_{i+1}`.
    pub fn check_partite(&self) -> Audit<usize> {
        for (k, e) in self.hypergraph.edges().iter().enumerate() {
            if e.len() != self.big_r || e.iter().enumerate().any(|(i, &v)| self.part_of(v) != i + 1) {
                return Audit::Violation(k);
            }
        }
        Audit::Pass
    }
}

fn vertex_id(offset: u64, side: u64, point: &[u64]) -> u64 {
    point.iter().rev().fold(0, |acc, &c| acc * side + (c - 1)) + offset
}

/// Edges `{x, x+a, …, x+(R−1)a}` for `x ∈ [r]^d` and `a ∈ A`, the `i`-th
/// vertex taken in part `X_{i+1}`.
pub fn efr_hypergraph(d: usize, r: u64, big_r: usize) -> Result<EfrInstance> {
    if d < 2 {
        return Err(Error::invalid("dimension d = 1 is not supported; need d >= 2"));
    }
    if r < 1 || big_r < 2 {
        return Err(Error::invalid(format!("need r >= 1 and R >= 2, got r = {r}, R = {big_r}")));
    }
    let a = sphere_points(d, r)?;
    if a.is_empty() {
        return Err(Error::invalid(format!("no positive integer points on the sphere of radius {r} in dimension {d}")));
    }
    let (parts, offsets, declared_n) = part_layout(d, r, big_r)?;
    if declared_n > MAX_DECLARED_N {
        return Err(Error::invalid(format!("declared vertex count {declared_n} exceeds {MAX_DECLARED_N}")));
    }
    let mut edges = Vec::with_capacity(a.len() * r.pow(d as u32) as usize);
    let mut x = vec![1u64; d];
    loop {
        for diff in &a.points {
            let edge = (0..big_r)
                .map(|i| {
                    let p: Vec<u64> = x.iter().zip(diff).map(|(&xi, &ai)| xi + i as u64 * ai).collect();
                    vertex_id(offsets[i], (i as u64 + 1) * r, &p) as usize
                })
                .collect::<Vec<_>>();
            edges.push(edge);
        }
        // odometer over [r]^d
        let mut j = 0;
        while j < d && x[j] == r {
            x[j] = 1;
            j += 1;
        }
        if j == d {
            break;
        }
        x[j] += 1;
    }
    edges.sort_unstable();
    let hypergraph = Hypergraph::new(declared_n as usize, edges, Some(big_r))?;
    Ok(EfrInstance { d, r, big_r, parts, offsets, declared_n, a_size: a.len(), hypergraph })
}

/// `ln(N² / R^{8 √(log_R N)})`.
pub fn log_edge_bound(n: f64, big_r: f64) -> f64 {
    2.0 * n.ln() - 8.0 * (n.ln() / big_r.ln()).sqrt() * big_r.ln()
}

/// Parameters for a target `(N, R)`: `d = ⌊√(log_R N)⌋`, `r = R^d`.
pub fn choose_parameters(n: u64, big_r: u64) -> Result<(usize, u64)> {
    if n < 3 || big_r < 3 {
        return Err(Error::invalid("need N >= 3 and R >= 3"));
    }
    // largest d with R^(d²) <= N, in exact arithmetic
    let mut d = 0usize;
    while big_r.checked_pow(((d + 1) * (d + 1)) as u32).is_some_and(|p| p <= n) {
        d += 1;
    }
    let r = big_r.checked_pow(d as u32).ok_or_else(|| Error::invalid("R^d overflows"))?;
    Ok((d, r))
}

/// Audits the three construction properties. Property (i) is evaluated
/// against `declared_n` and reported; it can fail at small parameters.
pub fn efr_certificate(inst: &EfrInstance) -> Certificate {
    let h = &inst.hypergraph;
    let mut c = Certificate::new("efr");
    c.param("efr.d", inst.d).param("efr.r", inst.r).param("efr.R", inst.big_r);
    c.param("efr.labels", "part-major, mixed radix, first coordinate least significant");
    c.param("efr.i.n_used", "declared_n");
    c.measure("efr.edges", h.edge_count()).measure("efr.declared_n", inst.declared_n);
    c.measure("efr.a_size", inst.a_size).measure("efr.part_sizes", &inst.parts);

    let n = inst.declared_n as f64;
    let big_r = inst.big_r as f64;
    let log_bound = log_edge_bound(n, big_r);
    c.measure_f64("efr.i.log_bound", log_bound).measure_f64("efr.i.bound", log_bound.exp());
    c.measure("efr.i.hypotheses_hold", n >= big_r && big_r >= n.ln() && big_r >= 3.0 && n >= 3.0);
    if (h.edge_count() as f64).ln() >= log_bound {
        c.pass("efr.i.edge_bound");
    } else {
        c.fail("efr.i.edge_bound", crate::error::Witness::Vertices(vec![h.edge_count()]));
    }
    if inst.d >= 5 {
        let lagrange = (inst.r as f64 / (inst.d as f64).sqrt()).powi(inst.d as i32 - 4);
        c.measure_f64("efr.a_lower_bound", lagrange);
    }

    let expected = inst.r.checked_pow(inst.d as u32).map(|x| x as usize * inst.a_size);
    if expected == Some(h.edge_count()) {
        c.pass("efr.edge_count_identity");
    } else {
        c.fail("efr.edge_count_identity", crate::error::Witness::Vertices(vec![h.edge_count()]));
    }
    match inst.check_partite() {
        Audit::Pass => c.pass("efr.partite"),
        Audit::Violation(k) => c.fail("efr.partite", h.edges_witness(&[k])),
    };
    match h.check_linear() {
        Audit::Pass => c.pass("efr.ii.linear"),
        Audit::Violation(p) => c.fail("efr.ii.linear", h.edges_witness(&p)),
    };
    match h.check_triangle_free() {
        Ok(Audit::Pass) => c.pass("efr.iii.triangle_free"),
        Ok(Audit::Violation(t)) => c.fail("efr.iii.triangle_free", h.edges_witness(&t)),
        Err(_) => c.unknown("efr.iii.triangle_free", "undefined for a non-linear hypergraph"),
    };
    c
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Verdict;

    #[test]
    fn sphere_point_examples() {
        assert_eq!(sphere_points(2, 5).unwrap().points, vec![vec![3, 4], vec![4, 3]]);
        assert!(sphere_points(2, 4).unwrap().is_empty());
        assert_eq!(sphere_points(3, 3).unwrap().points, vec![vec![1, 2, 2], vec![2, 1, 2], vec![2, 2, 1]]);
        assert!(sphere_points(5, 1).unwrap().is_empty());
        assert!(sphere_points(0, 3).is_err());
    }

    #[test]
    fn efr_small_instances() {
        let inst = efr_hypergraph(2, 5, 3).unwrap();
        assert_eq!(inst.hypergraph.edge_count(), 50);
        assert_eq!(inst.declared_n, 25 + 100 + 225);
        assert!(inst.check_partite().is_pass());
        let cert = efr_certificate(&inst);
        assert_eq!(cert.verdict("efr.ii.linear"), Some(Verdict::Pass));
        assert_eq!(cert.verdict("efr.iii.triangle_free"), Some(Verdict::Pass));
        assert_eq!(cert.verdict("efr.edge_count_identity"), Some(Verdict::Pass));

        assert_eq!(efr_hypergraph(3, 3, 3).unwrap().hypergraph.edge_count(), 81);
        let two = efr_hypergraph(2, 5, 2).unwrap();
        assert_eq!(two.hypergraph.edge_count(), 50);
        assert!(two.hypergraph.check_triangle_free().unwrap().is_pass());
    }

    #[test]
    fn efr_rejections() {
        assert!(efr_hypergraph(1, 5, 3).is_err());
        assert!(efr_hypergraph(2, 4, 3).is_err());
        assert!(efr_hypergraph(2, 5, 1).is_err());
    }

    #[test]
    fn labels_invert_vertex_ids() {
        let inst = efr_hypergraph(2, 5, 3).unwrap();
        let e = &inst.hypergraph.edges()[7];
        let pts: Vec<(usize, Vec<u64>)> = e.iter().map(|&v| inst.label(v)).collect();
        assert_eq!(pts.iter().map(|p| p.0).collect::<Vec<_>>(), vec![1, 2, 3]);
        // consecutive points differ by the same sphere point
        let a: Vec<i64> = (0..2).map(|j| pts[1].1[j] as i64 - pts[0].1[j] as i64).collect();
        let b: Vec<i64> = (0..2).map(|j| pts[2].1[j] as i64 - pts[1].1[j] as i64).collect();
        assert_eq!(a, b);
        assert_eq!(a[0] * a[0] + a[1] * a[1], 25);
    }

    #[test]
    fn wrapped_instances() {
        let single = Hypergraph::new(6, vec![vec![0, 1, 3]], Some(3)).unwrap();
        let inst = EfrInstance::wrap(1, 1, 3, single).unwrap();
        let cert = efr_certificate(&inst);
        for key in ["efr.i.edge_bound", "efr.ii.linear", "efr.iii.triangle_free"] {
            assert_eq!(cert.verdict(key), Some(Verdict::Pass), "{key}");
        }

        let bad = Hypergraph::new(6, vec![vec![0, 1, 3], vec![0, 1, 4]], Some(3)).unwrap();
        let cert = efr_certificate(&EfrInstance::wrap(1, 1, 3, bad).unwrap());
        assert_eq!(cert.verdict("efr.ii.linear"), Some(Verdict::Fail));
        assert!(cert.predicates["efr.ii.linear"].witness.is_some());
    }

    #[test]
    fn parameter_chooser() {
        // log_3(3^9) = 9, so d = 3 and r = 27
        assert_eq!(choose_parameters(3u64.pow(9), 3).unwrap(), (3, 27));
    }
}
