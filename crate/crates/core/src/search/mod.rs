//! Exact and randomized search engines.

mod cycles;
mod dense_pair;
mod drc;
mod independent;
mod spencer;
mod sunflower;

pub use cycles::{
    count_k_cycles_through, cycle_counts_per_vertex, find_k_cycle_within, list_k_cycles, list_k_cycles_through,
};
pub use dense_pair::{ckprop_dense_pair, edges_between, DensePair, LevelTrace};
pub use drc::{dependent_random_choice, DrcResult, DrcStatus};
pub use independent::{greedy_independent_set, max_f_free_subset, max_independent_set, Optimality, SetSearch};
pub use spencer::{spencer_independent_set, SpencerResult};
pub use sunflower::{erdos_rado_sunflower, erdos_rado_threshold, find_sunflower_exhaustive, Sunflower};
