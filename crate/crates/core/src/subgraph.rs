//! Budgeted (non-induced) subgraph containment.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::{iter_bits, popcount, VertexSet};

/// Limits for an exact search. Node limits are deterministic; time limits
/// are not, so certificates meant for byte-identical replay use nodes only.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub nodes: Option<u64>,
    pub time: Option<Duration>,
}

impl Budget {
    pub const UNLIMITED: Budget = Budget { nodes: None, time: None };

    pub fn nodes(limit: u64) -> Self {
        Budget { nodes: Some(limit), time: None }
    }

    pub fn time(limit: Duration) -> Self {
        Budget { nodes: None, time: Some(limit) }
    }

    pub(crate) fn meter(&self) -> Meter {
        Meter { limit: self.nodes, deadline: self.time.map(|t| Instant::now() + t), used: 0, exhausted: false }
    }
}

/// Running node/time accounting for one search.
#[derive(Debug)]
pub(crate) struct Meter {
    limit: Option<u64>,
    deadline: Option<Instant>,
    used: u64,
    exhausted: bool,
}

impl Meter {
    /// Counts one search node; false once the budget is gone.
    #[inline]
    pub(crate) fn tick(&mut self) -> bool {
        if self.exhausted {
            return false;
        }
        self.used += 1;
        let over_nodes = self.limit.is_some_and(|l| self.used > l);
        // the clock is read every 1024 nodes only
        let over_time = self.used.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d);
        self.exhausted = over_nodes || over_time;
        !self.exhausted
    }

    pub(crate) fn exhausted(&self) -> bool {
        self.exhausted
    }

    pub(crate) fn used(&self) -> u64 {
        self.used
    }
}

/// Outcome of a containment search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Embedding {
    /// `map[p]` is the host vertex carrying pattern vertex `p`.
    Found(Vec<usize>),
    Absent,
    /// Budget ran out before a proof either way.
    Unknown,
}

impl Embedding {
    pub fn is_absent(&self) -> bool {
        matches!(self, Embedding::Absent)
    }

    pub fn found(&self) -> Option<&[usize]> {
        match self {
            Embedding::Found(m) => Some(m),
            _ => None,
        }
    }
}

/// Searches `host` for a copy of `pattern` (not necessarily induced).
pub fn contains_subgraph(host: &Graph, pattern: &Graph, budget: Budget) -> Result<Embedding> {
    if pattern.n() == 0 {
        return Err(Error::invalid("pattern must have at least one vertex"));
    }
    let mut meter = budget.meter();
    Ok(Matcher::new(host, pattern, None).search(None, &mut meter))
}

/// True iff `map` is injective and carries every pattern edge to a host edge.
pub fn is_embedding(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&h| h >= host.n()) {
        return false;
    }
    let mut seen = VertexSet::new(host.n());
    for &h in map {
        if seen.contains(h) {
            return false;
        }
        seen.insert(h);
    }
    pattern.edges().into_iter().all(|(a, b)| host.has_edge(map[a], map[b]))
}

/// Backtracking matcher over an optional allowed host vertex mask.
pub(crate) struct Matcher<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    allowed: Vec<u64>,
    host_deg: Vec<usize>,
    pat_deg: Vec<usize>,
}

impl<'a> Matcher<'a> {
    pub(crate) fn new(host: &'a Graph, pattern: &'a Graph, allowed: Option<&VertexSet>) -> Self {
        let allowed = match allowed {
            Some(s) => s.words().to_vec(),
            None => VertexSet::full(host.n()).words().to_vec(),
        };
        let host_deg = (0..host.n())
            .map(|v| host.row(v).iter().zip(&allowed).map(|(a, b)| (a & b).count_ones() as usize).sum())
            .collect();
        let pat_deg = (0..pattern.n()).map(|v| pattern.degree(v)).collect();
        Matcher { host, pattern, allowed, host_deg, pat_deg }
    }

    /// Descending degree, then greedily most already-ordered neighbours.
    fn order_from(&self, first: Option<usize>) -> Vec<usize> {
        let k = self.pattern.n();
        let mut order = Vec::with_capacity(k);
        let mut placed = vec![false; k];
        let mut links = vec![0usize; k];
        let start = first.unwrap_or_else(|| (0..k).max_by_key(|&p| (self.pat_deg[p], std::cmp::Reverse(p))).unwrap());
        let mut next = Some(start);
        while let Some(p) = next {
            order.push(p);
            placed[p] = true;
            for q in self.pattern.neighbors(p) {
                links[q] += 1;
            }
            next = (0..k).filter(|&q| !placed[q]).max_by_key(|&q| (links[q], self.pat_deg[q], std::cmp::Reverse(q)));
        }
        order
    }

    /// Finds an embedding; with `must_use`, only ones whose image contains it.
    pub(crate) fn search(&self, must_use: Option<usize>, meter: &mut Meter) -> Embedding {
        let k = self.pattern.n();
        if popcount(&self.allowed) < k {
            return Embedding::Absent;
        }
        let mut map = vec![usize::MAX; k];
        let mut used = vec![0u64; self.allowed.len()];
        let starts: Vec<Option<usize>> = match must_use {
            None => vec![None],
            Some(h) => {
                if self.allowed[h / 64] >> (h % 64) & 1 == 0 {
                    return Embedding::Absent;
                }
                (0..k).filter(|&p| self.pat_deg[p] <= self.host_deg[h]).map(Some).collect()
            }
        };
        for first in starts {
            let order = self.order_from(first);
            let pinned = first.map(|_| must_use.unwrap());
            if self.extend(&order, 0, pinned, &mut map, &mut used, meter) {
                debug_assert!(is_embedding(self.host, self.pattern, &map));
                if !is_embedding(self.host, self.pattern, &map) {
                    // never surface an unverified map
                    return Embedding::Unknown;
                }
                return Embedding::Found(map);
            }
            if meter.exhausted() {
                return Embedding::Unknown;
            }
        }
        if meter.exhausted() {
            Embedding::Unknown
        } else {
            Embedding::Absent
        }
    }

    fn extend(
        &self,
        order: &[usize],
        depth: usize,
        pinned: Option<usize>,
        map: &mut [usize],
        used: &mut [u64],
        meter: &mut Meter,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        if !meter.tick() {
            return false;
        }
        let p = order[depth];
        let mut cand: Vec<u64> = self.allowed.iter().zip(used.iter()).map(|(a, u)| a & !u).collect();
        for q in self.pattern.neighbors(p) {
            if map[q] != usize::MAX {
                for (c, r) in cand.iter_mut().zip(self.host.row(map[q])) {
                    *c &= r;
                }
            }
        }
        let mut options: Vec<usize> = match (depth, pinned) {
            (0, Some(h)) => iter_bits(&cand).filter(|&c| c == h).collect(),
            _ => iter_bits(&cand).filter(|&c| self.host_deg[c] >= self.pat_deg[p]).collect(),
        };
        options.sort_by_key(|&c| (self.host_deg[c], c));
        for c in options {
            map[p] = c;
            used[c / 64] |= 1 << (c % 64);
            if self.extend(order, depth + 1, pinned, map, used, meter) {
                return true;
            }
            used[c / 64] &= !(1 << (c % 64));
            map[p] = usize::MAX;
            if meter.exhausted() {
                return false;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn spec_examples() {
        let b = Budget::UNLIMITED;
        assert_eq!(contains_subgraph(&cycle(5), &complete(3), b).unwrap(), Embedding::Absent);
        let m = contains_subgraph(&complete(4), &cycle(4), b).unwrap();
        assert!(is_embedding(&complete(4), &cycle(4), m.found().unwrap()));
        let m = contains_subgraph(&petersen(), &cycle(5), b).unwrap();
        assert!(is_embedding(&petersen(), &cycle(5), m.found().unwrap()));
        assert!(contains_subgraph(&petersen(), &Graph::new(0), b).is_err());
    }

    #[test]
    fn exhausted_budget_is_unknown() {
        // K_{6,6} has no triangle but plenty of search space
        let host = complete_bipartite(12, 12);
        let r = contains_subgraph(&host, &complete(3), Budget::nodes(3)).unwrap();
        assert_eq!(r, Embedding::Unknown);
        assert_eq!(contains_subgraph(&host, &complete(3), Budget::UNLIMITED).unwrap(), Embedding::Absent);
    }

    #[test]
    fn rooted_search_respects_mask() {
        let g = cycle(6);
        let allowed = VertexSet::from_vertices(6, [0, 1, 2, 3]).unwrap();
        let p3 = path(3);
        let m = Matcher::new(&g, &p3, Some(&allowed));
        let mut meter = Budget::UNLIMITED.meter();
        let e = m.search(Some(3), &mut meter);
        let map = e.found().unwrap();
        assert!(map.contains(&3) && map.iter().all(|&v| v < 4));
        let mut meter = Budget::UNLIMITED.meter();
        assert!(m.search(Some(5), &mut meter).is_absent());
    }
}
