use std::collections::BTreeSet;

use super::select::{select_step, weight_ratio, Selection};
use super::largest_subset;
use crate::error::{Error, Result};
use crate::graph::SelectionForest;
use crate::instance::{solution_unchecked, validate_instance, Instance, Solution, SubsetId};

/// Result of the cover-adjacent-only greedy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OriginalOutcome {
    Solved(Solution),
    /// No cover-adjacent subset adds coverage while elements remain.
    Deadlock {
        partial: BTreeSet<SubsetId>,
        uncovered: usize,
    },
}

/// The greedy that only looks at subsets sharing an element with the
/// current selection. It uses the same path ratio as [`super::modified_greedy`].
pub fn original_greedy(inst: &Instance) -> Result<OriginalOutcome> {
    validate_instance(inst).into_result(inst)?;

    let first = largest_subset(inst);
    let mut selection = BTreeSet::from([first]);
    let mut covered = inst.bits(first).clone();

    while covered.count_ones(..) < inst.n() {
        let forest = SelectionForest::grow(inst, &selection);
        let mut candidates = Vec::new();
        for s in inst.subset_ids() {
            if forest.contains(s) || inst.bits(s).is_disjoint(&covered) {
                continue;
            }
            let path = forest.path(inst, s, &covered).ok_or(Error::Disconnected)?;
            if !weight_ratio(&path).is_infinite() {
                candidates.push(path);
            }
        }
        let path = match select_step(&candidates) {
            Ok(Selection::Best(path)) => path,
            Ok(Selection::AllInfinite) | Err(Error::NoCandidates) => {
                return Ok(OriginalOutcome::Deadlock {
                    uncovered: inst.n() - covered.count_ones(..),
                    partial: selection,
                });
            }
            Err(e) => return Err(e),
        };
        selection.extend(path.vertices[1..].iter().copied());
        for e in &path.new_coverage {
            covered.insert(e.0);
        }
    }
    Ok(OriginalOutcome::Solved(solution_unchecked(inst, selection)))
}

/// Plain greedy set cover: repeatedly take the subset covering the most
/// uncovered elements, smallest id on ties. The graph is ignored.
pub fn classic_greedy_set_cover(inst: &Instance) -> Result<Solution> {
    let all: Vec<SubsetId> = inst.subset_ids().collect();
    let uncovered = inst.n() - inst.union_bits(&all).count_ones(..);
    if uncovered > 0 {
        return Err(Error::InfeasibleCover { uncovered });
    }
    let mut chosen = BTreeSet::new();
    let mut covered = fixedbitset::FixedBitSet::with_capacity(inst.n());
    while covered.count_ones(..) < inst.n() {
        let gain = |s: SubsetId| inst.bits(s).difference(&covered).count();
        let best = inst
            .subset_ids()
            .max_by(|&a, &b| gain(a).cmp(&gain(b)).then(b.cmp(&a)))
            .expect("instance has subsets");
        chosen.insert(best);
        covered.union_with(inst.bits(best));
    }
    Ok(solution_unchecked(inst, chosen))
}
