//! Graph homomorphisms `G → F`, i.e. whether some blowup of `F` contains `G`.

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::vertex_set::{iter_bits, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomCheck {
    /// No homomorphism `G → F` exists.
    pub hom_free: bool,
    /// A homomorphism `map[g] ∈ V(F)` when one exists.
    pub witness: Option<Vec<usize>>,
}

/// Decides whether `f` is hom(`g`)-free by backtracking over `V(g)` with
/// forward checking on per-vertex candidate sets.
pub fn is_hom_free(f: &Graph, g: &Graph) -> HomCheck {
    let order = search_order(g);
    let full = VertexSet::full(f.n()).words().to_vec();
    let domains = vec![full; g.n()];
    let mut map = vec![usize::MAX; g.n()];
    if assign(f, g, &order, 0, domains, &mut map) {
        debug_assert!(is_homomorphism(f, g, &map));
        HomCheck { hom_free: false, witness: Some(map) }
    } else {
        HomCheck { hom_free: true, witness: None }
    }
}

/// Every edge of `g` maps to an edge of `f`.
pub fn is_homomorphism(f: &Graph, g: &Graph, map: &[usize]) -> bool {
    map.len() == g.n() && map.iter().all(|&x| x < f.n()) && g.edges().iter().all(|&(a, b)| f.has_edge(map[a], map[b]))
}

fn search_order(g: &Graph) -> Vec<usize> {
    let k = g.n();
    let mut placed = vec![false; k];
    let mut links = vec![0usize; k];
    let mut order = Vec::with_capacity(k);
    for _ in 0..k {
        let p = (0..k).filter(|&q| !placed[q]).max_by_key(|&q| (links[q], g.degree(q), std::cmp::Reverse(q))).unwrap();
        placed[p] = true;
        order.push(p);
        for q in g.neighbors(p) {
            links[q] += 1;
        }
    }
    order
}

fn assign(f: &Graph, g: &Graph, order: &[usize], depth: usize, domains: Vec<Vec<u64>>, map: &mut [usize]) -> bool {
    let Some(&u) = order.get(depth) else {
        return true;
    };
    for x in iter_bits(&domains[u]) {
        let mut next = domains.clone();
        let mut dead = false;
        for w in g.neighbors(u) {
            if map[w] != usize::MAX {
                continue;
            }
            for (d, r) in next[w].iter_mut().zip(f.row(x)) {
                *d &= r;
            }
            if next[w].iter().all(|&d| d == 0) {
                dead = true;
                break;
            }
        }
        if dead {
            continue;
        }
        map[u] = x;
        if assign(f, g, order, depth + 1, next, map) {
            return true;
        }
        map[u] = usize::MAX;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn spec_examples() {
        assert!(is_hom_free(&cycle(5), &complete(3)).hom_free);
        let r = is_hom_free(&complete(3), &cycle(5));
        assert!(!r.hom_free);
        let map = r.witness.unwrap();
        assert!(is_homomorphism(&complete(3), &cycle(5), &map));
        // a proper 3-colouring of C5
        for v in 0..5 {
            assert_ne!(map[v], map[(v + 1) % 5]);
        }
        assert!(!is_hom_free(&complete(2), &complete_bipartite(2, 3)).hom_free);
        assert!(!is_hom_free(&complete(2), &cycle(6)).hom_free);
    }

    #[test]
    fn degenerate_sizes() {
        assert!(!is_hom_free(&complete(2), &Graph::new(0)).hom_free);
        assert!(is_hom_free(&Graph::new(0), &Graph::new(1)).hom_free);
        assert!(!is_hom_free(&Graph::new(1), &Graph::new(3)).hom_free);
        assert!(is_hom_free(&cycle(4), &cycle(5)).hom_free);
    }
}
