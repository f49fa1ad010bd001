//! Isomorph-free generation of small G-free graphs by canonical
//! augmentation, and the exact Erdős–Rogers value on top of it.

use std::collections::HashSet;
use std::sync::atomic::{AtomicU64, Ordering};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::search::{max_f_free_subset, Optimality};
use crate::subgraph::{Budget, Matcher};

/// Largest vertex count the canonical code can hold (upper triangle in a u64).
pub const MAX_ENUM_N: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    /// Upper-triangle adjacency under `labelling`, pair `(0,1)` most significant.
    pub code: u64,
    /// `labelling[i]` is the vertex placed at canonical position `i`.
    pub labelling: Vec<usize>,
}

fn code_of(g: &Graph, lab: &[usize]) -> u64 {
    let n = lab.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | u64::from(g.has_edge(lab[i], lab[j]));
        }
    }
    code
}

/// Splits cells by neighbour counts into earlier cells until equitable.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    'outer: loop {
        for si in 0..cells.len() {
            let splitter = cells[si].clone();
            let mut next = Vec::with_capacity(cells.len() + 1);
            let mut split = false;
            for cell in &cells {
                let mut keyed: Vec<(usize, usize)> =
                    cell.iter().map(|&v| (splitter.iter().filter(|&&u| g.has_edge(u, v)).count(), v)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                        start = i;
                    }
                }
                split |= !next.is_empty() && keyed.first().map(|f| f.0) != keyed.last().map(|l| l.0);
            }
            if split {
                cells = next;
                continue 'outer;
            }
        }
        return cells;
    }
}

fn search(g: &Graph, cells: Vec<Vec<usize>>, best: &mut Option<CanonicalForm>) {
    let cells = refine(g, cells);
    match cells.iter().position(|c| c.len() > 1) {
        None => {
            let lab: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
            let code = code_of(g, &lab);
            if best.as_ref().is_none_or(|b| code > b.code) {
                *best = Some(CanonicalForm { code, labelling: lab });
            }
        }
        Some(i) => {
            for &v in &cells[i] {
                let mut next = cells[..i].to_vec();
                next.push(vec![v]);
                next.push(cells[i].iter().copied().filter(|&u| u != v).collect());
                next.extend_from_slice(&cells[i + 1..]);
                search(g, next, best);
            }
        }
    }
}

fn canonical_with(g: &Graph, initial: Vec<Vec<usize>>) -> CanonicalForm {
    let mut best = None;
    search(g, initial.into_iter().filter(|c| !c.is_empty()).collect(), &mut best);
    best.unwrap_or(CanonicalForm { code: 0, labelling: Vec::new() })
}

/// Canonical labelling by individualization and refinement: isomorphic
/// graphs get equal codes. Panics above [`MAX_ENUM_N`] vertices.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    assert!(g.n() <= MAX_ENUM_N, "canonical_form supports at most {MAX_ENUM_N} vertices");
    canonical_with(g, vec![(0..g.n()).collect()])
}

/// Canonical form of `g` with vertex `x` distinguished.
fn canonical_marked(g: &Graph, x: usize) -> u64 {
    canonical_with(g, vec![vec![x], (0..g.n()).filter(|&v| v != x).collect()]).code
}

fn from_code(n: usize, code: u64) -> Graph {
    let mut g = Graph::new(n);
    let mut bit = n * n.saturating_sub(1) / 2;
    for i in 0..n {
        for j in i + 1..n {
            bit -= 1;
            if code >> bit & 1 == 1 {
                g.add_edge(i, j);
            }
        }
    }
    g
}

/// The children of `parent` that canonical augmentation accepts: G-free,
/// the new vertex in the orbit of the canonical deletion vertex, one per
/// isomorphism class.
fn children(parent: &Graph, g: &Graph) -> Vec<u64> {
    let m = parent.n();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << m) {
        let mut child = Graph::new(m + 1);
        for (a, b) in parent.edges() {
            child.add_edge(a, b);
        }
        for u in (0..m).filter(|u| mask >> u & 1 == 1) {
            child.add_edge(u, m);
        }
        if g.n() <= m + 1 {
            let mut meter = Budget::UNLIMITED.meter();
            if !Matcher::new(&child, g, None).search(Some(m), &mut meter).is_absent() {
                continue;
            }
        }
        let canon = canonical_form(&child);
        let c = *canon.labelling.last().expect("non-empty");
        if c != m && (child.degree(c) != child.degree(m) || canonical_marked(&child, c) != canonical_marked(&child, m))
        {
            continue;
        }
        if seen.insert(canon.code) {
            out.push(canon.code);
        }
    }
    out
}

/// All G-free graphs on `n` vertices up to isomorphism, in canonical form,
/// sorted by code. With a node budget, generation stops once that many
/// graphs have been produced and the flag is false.
pub fn generate_g_free(g: &Graph, n: usize, budget: Budget) -> Result<(Vec<Graph>, bool)> {
    if n == 0 || n > MAX_ENUM_N {
        return Err(Error::invalid(format!("n = {n} outside 1..={MAX_ENUM_N}")));
    }
    if g.n() == 0 {
        return Err(Error::invalid("G must have at least one vertex"));
    }
    if g.n() == 1 {
        return Ok((Vec::new(), true));
    }
    let limit = budget.nodes.unwrap_or(u64::MAX);
    let produced = AtomicU64::new(1);
    let mut level = vec![0u64];
    let mut complete = true;
    for m in 1..n {
        let mut next: Vec<u64> = level
            .par_iter()
            .flat_map_iter(|&code| {
                let kids = children(&from_code(m, code), g);
                produced.fetch_add(kids.len() as u64, Ordering::Relaxed);
                kids
            })
            .collect();
        next.sort_unstable();
        if produced.load(Ordering::Relaxed) > limit {
            complete = false;
            let keep = limit.saturating_sub(produced.load(Ordering::Relaxed) - next.len() as u64) as usize;
            next.truncate(keep.max(1).min(next.len()));
        }
        level = next;
    }
    Ok((level.into_iter().map(|c| from_code(n, c)).collect(), complete))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BruteForce {
    /// `min` over enumerated G-free graphs of the largest F-free subset.
    pub value: Option<usize>,
    /// The enumeration was complete, so `value` is `f_{F,G}(n)`.
    pub exact: bool,
    /// A G-free graph attaining the minimum.
    pub witness: Option<Graph>,
    pub graphs: usize,
}

/// Exact `f_{F,G}(n)` for tiny `n`: the minimum, over all G-free graphs on
/// `n` vertices up to isomorphism, of the largest F-free vertex subset.
pub fn brute_force_f(f: &Graph, g: &Graph, n: usize, budget: Budget) -> Result<BruteForce> {
    if f.edge_count() == 0 {
        return Err(Error::invalid("F must have at least one edge"));
    }
    let (graphs, complete) = generate_g_free(g, n, budget)?;
    let sizes: Vec<(usize, Optimality)> = graphs
        .par_iter()
        .map(|h| max_f_free_subset(h, f, Budget::UNLIMITED).map(|r| (r.size(), r.status)))
        .collect::<Result<_>>()?;
    let best = (0..graphs.len()).min_by_key(|&i| sizes[i].0);
    let all_optimal = sizes.iter().all(|s| s.1 == Optimality::Optimal);
    Ok(BruteForce {
        value: best.map(|i| sizes[i].0),
        exact: complete && all_optimal,
        witness: best.map(|i| graphs[i].clone()),
        graphs: graphs.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn canonical_forms_identify_isomorphs() {
        let a = cycle(5);
        let b = Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(canonical_form(&a).code, canonical_form(&b).code);
        assert_ne!(canonical_form(&path(5)).code, canonical_form(&a).code);
        let p = canonical_form(&petersen());
        assert_eq!(from_code(10, p.code).edge_count(), 15);
    }

    #[test]
    fn counts_of_all_graphs() {
        // unlabelled graphs on n vertices: 1, 2, 4, 11, 34, 156, 1044
        let k9 = complete(9);
        for (n, want) in [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)] {
            let (gs, complete) = generate_g_free(&k9, n, Budget::UNLIMITED).unwrap();
            assert!(complete);
            assert_eq!(gs.len(), want, "n = {n}");
        }
    }

    #[test]
    fn counts_of_triangle_free_graphs() {
        // OEIS A006785: 1, 2, 3, 7, 14, 38, 107, 410
        let k3 = complete(3);
        for (n, want) in [(1, 1), (2, 2), (3, 3), (4, 7), (5, 14), (6, 38), (7, 107), (8, 410)] {
            assert_eq!(generate_g_free(&k3, n, Budget::UNLIMITED).unwrap().0.len(), want, "n = {n}");
        }
    }

    #[test]
    fn small_erdos_rogers_values() {
        let (k2, k3) = (complete(2), complete(3));
        for (n, want) in [(2, 1), (5, 2), (6, 3), (8, 3)] {
            let r = brute_force_f(&k2, &k3, n, Budget::UNLIMITED).unwrap();
            assert!(r.exact);
            assert_eq!(r.value, Some(want), "n = {n}");
        }
    }

    #[test]
    fn budget_truncates() {
        let r = brute_force_f(&complete(2), &complete(3), 7, Budget::nodes(10)).unwrap();
        assert!(!r.exact);
        assert!(r.value.is_some());
    }
}
