//! Checking a supplied witness for `f_{F,G}(r(G,t) - 1) < r(F,t)`.

use crate::certificate::Certificate;
use crate::error::{Result, Witness};
use crate::graph::Graph;
use crate::search::{max_independent_set, Optimality};
use crate::subgraph::Budget;

use super::{max_f_free_measure, record_free};

/// Three verdicts on `H`: it is G-free, `α(H) < t`, and its largest F-free
/// subset has fewer than `rF_t` vertices.
pub fn ramsey_witness_check(
    h: &Graph,
    f: &Graph,
    g: &Graph,
    t: usize,
    rf_t: usize,
    budget: Budget,
) -> Result<Certificate> {
    let mut c = Certificate::new("ramsey_witness");
    c.param("ramsey.H", h).param("ramsey.F", f).param("ramsey.G", g);
    c.param("ramsey.t", t).param("ramsey.rF_t", rf_t);
    record_free(&mut c, "ramsey.g_free", h, g, budget)?;

    let a = max_independent_set(h, budget);
    c.measure("ramsey.alpha", a.size()).measure("ramsey.alpha_status", a.status);
    if a.size() >= t {
        c.fail("ramsey.alpha_below_t", Witness::Vertices(a.set.iter().take(t).collect()));
    } else if a.status == Optimality::Optimal {
        c.pass("ramsey.alpha_below_t");
    } else {
        c.unknown("ramsey.alpha_below_t", "search budget exhausted");
    }

    let m = max_f_free_measure(h, f, budget)?;
    c.measure("ramsey.max_f_free", m.size()).measure("ramsey.max_f_free_status", m.status);
    if m.size() >= rf_t {
        c.fail("ramsey.f_free_below_rF_t", Witness::Vertices(m.set.iter().take(rf_t).collect()));
    } else if m.status == Optimality::Optimal {
        c.pass("ramsey.f_free_below_rF_t");
    } else {
        c.unknown("ramsey.f_free_below_rF_t", "search budget exhausted");
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::Verdict;
    use crate::graph::named::*;

    #[test]
    fn pentagon_witness() {
        let c = ramsey_witness_check(&cycle(5), &complete(2), &complete(3), 3, 3, Budget::UNLIMITED).unwrap();
        assert!(c.all_pass());
        assert_eq!(c.measurements["ramsey.alpha"], 2);
        let c = ramsey_witness_check(&cycle(5), &complete(2), &complete(3), 2, 3, Budget::UNLIMITED).unwrap();
        assert_eq!(c.verdict("ramsey.alpha_below_t"), Some(Verdict::Fail));
    }

    #[test]
    fn wagner_witness() {
        let h = circulant(8, &[1, 4]);
        let c = ramsey_witness_check(&h, &complete(2), &complete(3), 4, 4, Budget::UNLIMITED).unwrap();
        assert!(c.all_pass());
        assert_eq!(c.measurements["ramsey.alpha"], 3);
    }
}
