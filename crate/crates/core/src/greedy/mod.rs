//! Greedy algorithms for connected set cover.
//!
//! [`modified_greedy`] grows a selection from the largest subset by
//! repeatedly adding the cheapest shortest path (fewest new vertices per
//! newly covered element) to any subset that is cover-adjacent or
//! graph-adjacent to the selection. [`original_greedy`] considers only
//! cover-adjacent subsets and can deadlock. [`classic_greedy_set_cover`]
//! ignores the graph.

mod baseline;
mod select;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::Result;
use crate::graph::{PathCandidate, SelectionForest};
use crate::instance::{solution_unchecked, validate_instance, ElementId, Instance, Solution, SubsetId};

pub use baseline::{classic_greedy_set_cover, original_greedy, OriginalOutcome};
pub use select::{enumerate_candidates, relay_select, select_step, weight_ratio, Selection};

/// Path length over newly covered count. A zero denominator is infinite.
///
/// Ordering is exact; all infinite ratios compare equal and above every
/// finite one.
#[derive(Debug, Clone, Copy)]
pub struct Ratio {
    pub num: usize,
    pub den: usize,
}

impl Ratio {
    pub fn new(num: usize, den: usize) -> Self {
        Self { num, den }
    }

    pub fn is_infinite(&self) -> bool {
        self.den == 0
    }

    /// Exact value, `None` when infinite.
    pub fn to_rational(self) -> Option<BigRational> {
        (!self.is_infinite()).then(|| BigRational::new(BigInt::from(self.num), BigInt::from(self.den)))
    }
}

impl PartialEq for Ratio {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Ratio {}

impl PartialOrd for Ratio {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ratio {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => {
                let lhs = self.num as u128 * other.den as u128;
                let rhs = other.num as u128 * self.den as u128;
                lhs.cmp(&rhs)
            }
        }
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_infinite() {
            f.write_str("inf")
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepKind {
    /// The largest subset, chosen first.
    Initial,
    /// A path with positive new coverage.
    Path,
    /// A zero-coverage neighbour added to move toward uncovered elements.
    Relay,
}

impl fmt::Display for StepKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            StepKind::Initial => "initial",
            StepKind::Path => "path",
            StepKind::Relay => "relay",
        })
    }
}

/// One iteration of a greedy run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyStep {
    pub kind: StepKind,
    /// Subsets added to the selection by this step.
    pub added: Vec<SubsetId>,
    /// The selected path; `None` for the initial pick.
    pub path: Option<PathCandidate>,
    pub newly_covered: BTreeSet<ElementId>,
    /// Charge per newly covered element; `None` for relays.
    pub charge: Option<Ratio>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GreedyTrace {
    pub steps: Vec<GreedyStep>,
    pub final_solution: Solution,
    pub relay_count: usize,
}

impl GreedyTrace {
    /// Selection after each step, in order.
    pub fn prefixes(&self) -> Vec<BTreeSet<SubsetId>> {
        let mut acc = BTreeSet::new();
        self.steps
            .iter()
            .map(|s| {
                acc.extend(s.added.iter().copied());
                acc.clone()
            })
            .collect()
    }
}

/// Largest subset, smallest id on ties.
pub(crate) fn largest_subset(inst: &Instance) -> SubsetId {
    inst.subset_ids()
        .max_by(|a, b| inst.subset(*a).len().cmp(&inst.subset(*b).len()).then(b.cmp(a)))
        .expect("instance has at least one subset")
}

/// Runs the corrected greedy and returns the solution with a full trace.
///
/// When every candidate would cover nothing new, one relay subset is added
/// instead (see [`relay_select`]); relays carry no charge.
pub fn modified_greedy(inst: &Instance) -> Result<(Solution, GreedyTrace)> {
    validate_instance(inst).into_result(inst)?;

    let first = largest_subset(inst);
    let mut selection = BTreeSet::from([first]);
    let mut covered = inst.bits(first).clone();
    let mut steps = vec![GreedyStep {
        kind: StepKind::Initial,
        added: vec![first],
        path: None,
        newly_covered: inst.subset(first).iter().copied().collect(),
        charge: Some(Ratio::new(1, inst.subset(first).len())),
    }];
    let mut relay_count = 0;

    while covered.count_ones(..) < inst.n() {
        let forest = SelectionForest::grow(inst, &selection);
        let candidates = select::candidates_from(inst, &forest, &covered)?;
        let step = match select_step(&candidates)? {
            Selection::Best(path) => GreedyStep {
                kind: StepKind::Path,
                added: path.vertices[1..].to_vec(),
                newly_covered: path.new_coverage.clone(),
                charge: Some(weight_ratio(&path)),
                path: Some(path),
            },
            Selection::AllInfinite => {
                let relay = select::relay_from(inst, &selection, &covered)?;
                let path = forest.path(inst, relay, &covered).expect("relay is graph-adjacent");
                relay_count += 1;
                GreedyStep {
                    kind: StepKind::Relay,
                    added: vec![relay],
                    newly_covered: BTreeSet::new(),
                    charge: None,
                    path: Some(path),
                }
            }
        };
        selection.extend(step.added.iter().copied());
        for e in &step.newly_covered {
            covered.insert(e.0);
        }
        steps.push(step);
    }

    let solution = solution_unchecked(inst, selection);
    let trace = GreedyTrace {
        steps,
        final_solution: solution.clone(),
        relay_count,
    };
    Ok((solution, trace))
}
