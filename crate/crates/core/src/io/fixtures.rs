//! Built-in instances.

use crate::cds::CdsGraph;
use crate::error::{Error, Result};
use crate::instance::Instance;

pub const FIXTURE_NAMES: [&str; 3] = ["deadlock-counterexample", "sample-cds", "relay-path"];

/// A named fixture is either an instance or a graph for the CDS reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fixture {
    Instance(Instance),
    Cds(CdsGraph),
}

impl Fixture {
    /// The instance itself, or the reduction of a CDS graph.
    pub fn into_instance(self) -> Result<Instance> {
        match self {
            Fixture::Instance(inst) => Ok(inst),
            Fixture::Cds(g) => crate::cds::reduce_cds(&g),
        }
    }
}

pub fn builtin_fixture(name: &str) -> Result<Fixture> {
    match name {
        "deadlock-counterexample" => Ok(Fixture::Instance(deadlock_counterexample())),
        "sample-cds" => Ok(Fixture::Cds(sample_cds())),
        "relay-path" => Ok(Fixture::Instance(relay_path())),
        _ => Err(Error::UnknownFixture {
            name: name.to_string(),
            valid: FIXTURE_NAMES.join(", "),
        }),
    }
}

/// Universe {0,1,2,3}; subsets {0,1},{0},{1},{1,2},{3}; complete graph.
/// The cover-adjacent-only greedy deadlocks on it after picking 0 and 3.
pub fn deadlock_counterexample() -> Instance {
    let subsets = vec![vec![0, 1], vec![0], vec![1], vec![1, 2], vec![3]];
    let edges: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
    Instance::new(4, subsets, &edges).expect("fixture is well-formed")
}

/// Eight vertices; edges v1v2 v1v4 v2v3 v3v4 v3v5 v3v6 v3v7 v4v7 v5v8,
/// relabelled 0-based.
pub fn sample_cds() -> CdsGraph {
    CdsGraph::new(
        8,
        &[(0, 1), (0, 3), (1, 2), (2, 3), (2, 4), (2, 5), (2, 6), (3, 6), (4, 7)],
    )
    .expect("fixture is well-formed")
}

/// Universe {0,1,2}; subsets A={0,1}, B={1}, C={2} on the path A-B-C.
/// After A is chosen the only candidate B covers nothing new.
pub fn relay_path() -> Instance {
    Instance::new(3, vec![vec![0, 1], vec![1], vec![2]], &[(0, 1), (1, 2)]).expect("fixture is well-formed")
}
