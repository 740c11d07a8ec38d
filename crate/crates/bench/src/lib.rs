//! Shared inputs for the criterion benchmarks in `benches/`.

use mcsc_core::io::{gen_random, GenConfig, GraphKind};
use mcsc_core::Instance;

/// A feasible random instance with a sparse random graph.
pub fn sparse_instance(n_elements: usize, m_subsets: usize, seed: u64) -> Instance {
    gen_random(&GenConfig {
        n_elements,
        m_subsets,
        element_prob: 0.15,
        graph_kind: GraphKind::Gnp(0.2),
        seed,
        ensure_feasible: true,
    })
    .expect("valid generator config")
}
