//! Exact k-cycle enumeration by rooted depth-first search.
//!
//! A cycle rooted at `s` is reported once, as `(s, σ1, …, σ_{k-1})` with
//! `σ1 < σ_{k-1}`.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

pub const MIN_K: usize = 3;
pub const MAX_K: usize = 12;

fn check_k(k: usize) -> Result<()> {
    if !(MIN_K..=MAX_K).contains(&k) {
        return Err(Error::invalid(format!("cycle length k = {k} outside {MIN_K}..={MAX_K}")));
    }
    Ok(())
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::invalid(format!("vertex {v} out of range for n = {}", g.n())));
    }
    Ok(())
}

/// Walks every k-cycle through `start` inside `allowed`; `visit` returns
/// false to stop early.
fn walk(g: &Graph, start: usize, k: usize, allowed: &VertexSet, visit: &mut dyn FnMut(&[usize]) -> bool) {
    let n = g.n();
    if !allowed.contains(start) {
        return;
    }
    // BFS distance back to start, used to cut paths that cannot close in time
    let mut dist = vec![usize::MAX; n];
    dist[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for w in g.neighbors(u) {
            if allowed.contains(w) && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    let mut path = Vec::with_capacity(k);
    path.push(start);
    let mut used = VertexSet::new(n);
    used.insert(start);
    let mut w = Walker { g, k, allowed, dist: &dist, path, used, visit };
    w.extend();
}

struct Walker<'a, 'b> {
    g: &'a Graph,
    k: usize,
    allowed: &'a VertexSet,
    dist: &'a [usize],
    path: Vec<usize>,
    used: VertexSet,
    visit: &'b mut dyn FnMut(&[usize]) -> bool,
}

impl Walker<'_, '_> {
    fn extend(&mut self) -> bool {
        let depth = self.path.len();
        let last = *self.path.last().expect("rooted");
        let start = self.path[0];
        if depth == self.k {
            if self.g.has_edge(last, start) && self.path[1] < last {
                return (self.visit)(&self.path);
            }
            return true;
        }
        let remaining = self.k - depth;
        let next: Vec<usize> = self
            .g
            .neighbors(last)
            .filter(|&w| self.allowed.contains(w) && !self.used.contains(w) && self.dist[w] <= remaining)
            .collect();
        for w in next {
            // the closing vertex must exceed σ1
            if depth == self.k - 1 && w < self.path[1] {
                continue;
            }
            self.path.push(w);
            self.used.insert(w);
            let go = self.extend();
            self.used.remove(w);
            self.path.pop();
            if !go {
                return false;
            }
        }
        true
    }
}

/// Number of k-cycles through `v0`.
pub fn count_k_cycles_through(g: &Graph, v0: usize, k: usize) -> Result<u64> {
    check_k(k)?;
    check_vertex(g, v0)?;
    let mut count = 0u64;
    walk(g, v0, k, &VertexSet::full(g.n()), &mut |_| {
        count += 1;
        true
    });
    Ok(count)
}

/// The k-cycles through `v0` as `(v0, σ1, …, σ_{k-1})` with `σ1 < σ_{k-1}`,
/// in lexicographic order, at most `cap` of them.
pub fn list_k_cycles_through(g: &Graph, v0: usize, k: usize, cap: Option<usize>) -> Result<Vec<Vec<usize>>> {
    check_k(k)?;
    check_vertex(g, v0)?;
    let mut out = Vec::new();
    if cap == Some(0) {
        return Ok(out);
    }
    walk(g, v0, k, &VertexSet::full(g.n()), &mut |c| {
        out.push(c.to_vec());
        cap.is_none_or(|m| out.len() < m)
    });
    Ok(out)
}

/// Every k-cycle of `g` once, rooted at its least vertex.
pub fn list_k_cycles(g: &Graph, k: usize, cap: Option<usize>) -> Result<Vec<Vec<usize>>> {
    check_k(k)?;
    let n = g.n();
    let mut out = Vec::new();
    if cap == Some(0) {
        return Ok(out);
    }
    let mut allowed = VertexSet::full(n);
    for s in 0..n {
        let mut go = true;
        walk(g, s, k, &allowed, &mut |c| {
            out.push(c.to_vec());
            go = cap.is_none_or(|m| out.len() < m);
            go
        });
        if !go {
            break;
        }
        allowed.remove(s);
    }
    Ok(out)
}

/// `counts[v]` is the number of k-cycles through `v`.
pub fn cycle_counts_per_vertex(g: &Graph, k: usize) -> Result<Vec<u64>> {
    check_k(k)?;
    let n = g.n();
    let mut counts = vec![0u64; n];
    let mut allowed = VertexSet::full(n);
    for s in 0..n {
        walk(g, s, k, &allowed, &mut |c| {
            for &v in c {
                counts[v] += 1;
            }
            true
        });
        allowed.remove(s);
    }
    Ok(counts)
}

/// Some k-cycle using only vertices of `within`, rooted at its least vertex.
pub fn find_k_cycle_within(g: &Graph, within: &VertexSet, k: usize) -> Result<Option<Vec<usize>>> {
    check_k(k)?;
    if within.universe() != g.n() {
        return Err(Error::invalid("vertex set universe does not match graph"));
    }
    let mut allowed = within.clone();
    for s in within.to_vec() {
        let mut found = None;
        walk(g, s, k, &allowed, &mut |c| {
            found = Some(c.to_vec());
            false
        });
        if found.is_some() {
            return Ok(found);
        }
        allowed.remove(s);
    }
    Ok(None)
}
