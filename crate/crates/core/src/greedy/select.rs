use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;

use super::Ratio;
use crate::error::{Error, Result};
use crate::graph::{bfs, PathCandidate, SelectionForest};
use crate::instance::{ElementId, Instance, SubsetId};

/// Outcome of choosing among candidate paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Selection {
    Best(PathCandidate),
    /// Every candidate covers nothing new.
    AllInfinite,
}

/// Path length over the number of newly covered elements.
pub fn weight_ratio(path: &PathCandidate) -> Ratio {
    Ratio::new(path.length, path.new_coverage.len())
}

fn to_bits(inst: &Instance, elems: &BTreeSet<ElementId>) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(inst.n());
    for e in elems {
        b.insert(e.0);
    }
    b
}

fn check_selection(inst: &Instance, selection: &BTreeSet<SubsetId>) -> Result<()> {
    if selection.is_empty() {
        return Err(Error::EmptySelection);
    }
    selection.iter().try_for_each(|&s| inst.check_id(s))
}

/// One shortest path per unselected subset that shares an element with
/// `covered` or has a graph edge into the selection, sorted by target id.
pub fn enumerate_candidates(
    inst: &Instance,
    selection: &BTreeSet<SubsetId>,
    covered: &BTreeSet<ElementId>,
) -> Result<Vec<PathCandidate>> {
    check_selection(inst, selection)?;
    let forest = SelectionForest::grow(inst, selection);
    candidates_from(inst, &forest, &to_bits(inst, covered))
}

pub(super) fn candidates_from(
    inst: &Instance,
    forest: &SelectionForest,
    covered: &FixedBitSet,
) -> Result<Vec<PathCandidate>> {
    let mut out = Vec::new();
    for s in inst.subset_ids() {
        if forest.contains(s) {
            continue;
        }
        let graph_adj = inst.neighbors(s).iter().any(|&t| forest.contains(t));
        let cover_adj = !inst.bits(s).is_disjoint(covered);
        if graph_adj || cover_adj {
            out.push(forest.path(inst, s, covered).ok_or(Error::Disconnected)?);
        }
    }
    Ok(out)
}

/// Minimum weight ratio; ties go to the shorter path, then the smaller
/// target id.
pub fn select_step(candidates: &[PathCandidate]) -> Result<Selection> {
    let best = candidates
        .iter()
        .min_by(|a, b| {
            weight_ratio(a)
                .cmp(&weight_ratio(b))
                .then(a.length.cmp(&b.length))
                .then(a.target.cmp(&b.target))
        })
        .ok_or(Error::NoCandidates)?;
    if weight_ratio(best).is_infinite() {
        Ok(Selection::AllInfinite)
    } else {
        Ok(Selection::Best(best.clone()))
    }
}

/// Picks the unselected graph neighbour of the selection that is closest,
/// through unselected subsets, to a subset holding an uncovered element.
/// Ties go to the smaller id.
pub fn relay_select(inst: &Instance, selection: &BTreeSet<SubsetId>, covered: &BTreeSet<ElementId>) -> Result<SubsetId> {
    check_selection(inst, selection)?;
    relay_from(inst, selection, &to_bits(inst, covered))
}

pub(super) fn relay_from(inst: &Instance, selection: &BTreeSet<SubsetId>, covered: &FixedBitSet) -> Result<SubsetId> {
    let outside: Vec<bool> = inst.subset_ids().map(|s| !selection.contains(&s)).collect();
    let goals: Vec<SubsetId> = inst
        .subset_ids()
        .filter(|&s| outside[s.0] && !inst.bits(s).is_subset(covered))
        .collect();
    let dist = bfs(inst, &goals, Some(&outside));
    inst.subset_ids()
        .filter(|&s| outside[s.0] && inst.neighbors(s).iter().any(|t| !outside[t.0]))
        .filter_map(|s| dist[s.0].map(|d| (d, s)))
        .min()
        .map(|(_, s)| s)
        .ok_or(Error::RelayStuck)
}
