//! End-to-end constructions and the desk-scale checks that certify them.

mod enumerate;
mod ramsey;
mod theorem1;
mod theorem3;
mod theorem4;

pub use enumerate::{brute_force_f, canonical_form, generate_g_free, BruteForce, CanonicalForm};
pub use ramsey::ramsey_witness_check;
pub use theorem1::{theorem1_build, Theorem1Build, Theorem1Options};
pub use theorem3::{alpha_k, ckfree_subset, ksfree_recursion, CkFreeOptions, CkFreeResult, KsFreeResult, KsFreeStep};
pub use theorem4::{
    count_s_edges, gplus_family, random_girth_hypergraph, sprop_statistics, sunflower_calculator, theorem4_part1_build,
    theorem4_part2_all_pairs, theorem4_part2_build, GPlusFamily, GirthHypergraph, GirthHypergraphParams, PruneClass,
    SPropLevel, SPropReport, SunflowerCalculator, Theorem4Part1, Theorem4Part1Options, Theorem4Part2,
    Theorem4Part2Options,
};

use crate::certificate::Certificate;
use crate::error::{Result, Witness};
use crate::graph::Graph;
use crate::search::{max_f_free_subset, max_independent_set, SetSearch};
use crate::subgraph::{contains_subgraph, Budget, Embedding};

fn is_k2(f: &Graph) -> bool {
    f.n() == 2 && f.edge_count() == 1
}

/// Largest F-free vertex subset, using the faster independent-set engine
/// when F is a single edge.
pub fn max_f_free_measure(g: &Graph, f: &Graph, budget: Budget) -> Result<SetSearch> {
    if is_k2(f) {
        Ok(max_independent_set(g, budget))
    } else {
        max_f_free_subset(g, f, budget)
    }
}

/// Records whether `host` avoids `pattern` under `key`.
pub(crate) fn record_free(
    cert: &mut Certificate,
    key: &str,
    host: &Graph,
    pattern: &Graph,
    budget: Budget,
) -> Result<Embedding> {
    let e = contains_subgraph(host, pattern, budget)?;
    match &e {
        Embedding::Absent => cert.pass(key),
        Embedding::Found(map) => cert.fail(key, Witness::Map(map.clone())),
        Embedding::Unknown => cert.unknown(key, "search budget exhausted"),
    };
    Ok(e)
}

pub(crate) fn record_search(cert: &mut Certificate, prefix: &str, r: &SetSearch) {
    cert.measure(format!("{prefix}.size"), r.size());
    cert.measure(format!("{prefix}.status"), r.status);
    cert.measure(format!("{prefix}.nodes"), r.nodes);
}
