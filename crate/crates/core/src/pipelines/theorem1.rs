//! Triangle-free graphs with no large F-free set: linear triangle-free
//! hypergraph, its line graph, then a random blowup of F in every star.

use crate::blowup::{random_blowup, theorem1_failure_bound, theorem1_required_uniformity, BlowupColoring, CliqueCover};
use crate::certificate::{Certificate, Verdict};
use crate::efr::{efr_certificate, efr_hypergraph, EfrInstance};
use crate::error::{Error, Result, Witness};
use crate::graph::Graph;
use crate::hypergraph::Audit;
use crate::rng::SeededRng;
use crate::search::Optimality;
use crate::subgraph::Budget;

use super::{max_f_free_measure, record_search};

#[derive(Debug, Clone, Copy)]
pub struct Theorem1Options {
    /// Largest graph on which the maximum F-free subset is measured.
    pub measure_max_n: usize,
    pub measure_budget: Budget,
}

impl Default for Theorem1Options {
    fn default() -> Self {
        Theorem1Options { measure_max_n: 64, measure_budget: Budget::nodes(2_000_000) }
    }
}

#[derive(Debug, Clone)]
pub struct Theorem1Build {
    pub instance: EfrInstance,
    pub cover: CliqueCover,
    pub graph: Graph,
    pub coloring: BlowupColoring,
    pub certificate: Certificate,
}

pub fn theorem1_build(
    d: usize,
    r: u64,
    big_r: usize,
    f: &Graph,
    rng: &SeededRng,
    opts: Theorem1Options,
) -> Result<Theorem1Build> {
    if f.edge_count() == 0 {
        return Err(Error::invalid("F must have at least one edge"));
    }
    if let Some(t) = f.find_triangle() {
        return Err(Error::precondition("F contains a triangle", Witness::Vertices(t.to_vec())));
    }
    let instance = efr_hypergraph(d, r, big_r)?;
    let (line, cover) = instance.hypergraph.line_intersection_graph()?;
    let (graph, coloring) = random_blowup(&cover, f, &rng.substream("blowup"))?;

    let mut c = Certificate::new("theorem1");
    c.merge(&efr_certificate(&instance));
    c.param("theorem1.F", f);
    c.param("theorem1.t", f.n());
    c.seed("theorem1.blowup", rng.seed());
    c.measure("theorem1.vertices", graph.n());
    c.measure("theorem1.edges", graph.edge_count());
    c.measure("theorem1.line_graph_edges", line.edge_count());
    c.measure("theorem1.stars", cover.cliques().len());

    c.check(
        "theorem1.vertices_are_hyperedges",
        if graph.n() == instance.hypergraph.edge_count() { Ok(()) } else { Err(Witness::Vertices(vec![graph.n()])) },
    );
    match cover.check_cliques() {
        Audit::Pass => c.pass("theorem1.cover.cliques"),
        Audit::Violation((_, u, v)) => c.fail("theorem1.cover.cliques", Witness::Vertices(vec![u, v])),
    };
    match cover.check_edge_disjoint() {
        Audit::Pass => c.pass("theorem1.cover.edge_disjoint"),
        Audit::Violation([i, j]) => c.fail(
            "theorem1.cover.edge_disjoint",
            Witness::Edges(vec![cover.cliques()[i].to_vec(), cover.cliques()[j].to_vec()]),
        ),
    };
    match cover.check_covering() {
        Audit::Pass => c.pass("theorem1.cover.covering"),
        Audit::Violation((u, v)) => c.fail("theorem1.cover.covering", Witness::Vertices(vec![u, v])),
    };
    c.check(
        "theorem1.blowup_rederives",
        if coloring.rederive(graph.n()) == graph { Ok(()) } else { Err(Witness::Vertices(vec![])) },
    );
    match graph.find_triangle() {
        None => c.pass("theorem1.triangle_free"),
        Some(t) => c.fail("theorem1.triangle_free", Witness::Vertices(t.to_vec())),
    };

    // the union bound with target N = number of hypergraph vertices
    let t = f.n() as u64;
    let big_n = instance.declared_n;
    let bound = theorem1_failure_bound(t, big_r as u64, big_n)?;
    c.param("theorem1.N", big_n);
    c.measure_f64("theorem1.bound.log_sets", bound.log_sets);
    c.measure_f64("theorem1.bound.log_set_failure", bound.log_set_failure);
    c.measure_f64("theorem1.bound.log_expected", bound.log_expected);
    c.measure("theorem1.bound.guaranteed", bound.guaranteed);
    c.measure("theorem1.bound.simplified_chain_holds", bound.simplified_chain_holds);
    let required = theorem1_required_uniformity(t, big_n);
    c.measure("theorem1.rule.required_R", required);
    c.measure("theorem1.rule.holds", big_r as u64 >= required);

    // the claim: no F-free set of N vertices
    if graph.n() < big_n as usize {
        c.predicate(
            "theorem1.no_f_free_N_set",
            Verdict::Pass,
            None,
            Some(format!("vacuous: {} vertices < N = {big_n}", graph.n())),
        );
    }
    if graph.n() <= opts.measure_max_n {
        let m = max_f_free_measure(&graph, f, opts.measure_budget)?;
        record_search(&mut c, "theorem1.max_f_free", &m);
        if graph.n() >= big_n as usize {
            if m.size() >= big_n as usize {
                c.fail("theorem1.no_f_free_N_set", Witness::Vertices(m.set.to_vec()));
            } else if m.status == Optimality::Optimal {
                c.pass("theorem1.no_f_free_N_set");
            } else {
                c.unknown("theorem1.no_f_free_N_set", "search budget exhausted");
            }
        }
    } else if graph.n() >= big_n as usize {
        c.unknown("theorem1.no_f_free_N_set", "graph too large for exact measurement");
    }
    Ok(Theorem1Build { instance, cover, graph, coloring, certificate: c })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named::*;

    #[test]
    fn small_instance_is_triangle_free() {
        let b = theorem1_build(2, 5, 3, &complete(2), &SeededRng::new(7, "t1"), Theorem1Options::default()).unwrap();
        assert_eq!(b.graph.n(), 50);
        assert!(b.graph.is_triangle_free());
        let c = &b.certificate;
        assert_eq!(c.verdict("theorem1.triangle_free"), Some(Verdict::Pass));
        assert!(c.measurements.contains_key("theorem1.max_f_free.size"));
        for key in ["theorem1.cover.cliques", "theorem1.cover.edge_disjoint", "theorem1.cover.covering"] {
            assert_eq!(c.verdict(key), Some(Verdict::Pass), "{key}");
        }
    }

    #[test]
    fn rejects_patterns_with_triangles() {
        let err = theorem1_build(2, 5, 3, &complete(3), &SeededRng::new(0, "t1"), Theorem1Options::default());
        assert!(matches!(err, Err(Error::Precondition { .. })));
    }

    #[test]
    fn certificate_is_reproducible() {
        let run = || {
            theorem1_build(2, 5, 3, &cycle(5), &SeededRng::new(7, "t1"), Theorem1Options::default())
                .unwrap()
                .certificate
                .to_json()
        };
        assert_eq!(run(), run());
    }
}
