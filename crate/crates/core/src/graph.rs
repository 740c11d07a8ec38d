//! Computations on the auxiliary graph: distances, the two adjacency
//! relations, cover-diameter, induced connectivity and restricted
//! shortest paths out of a current selection.

use std::collections::{BTreeSet, VecDeque};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::instance::{ElementId, Instance, SubsetId};

/// Breadth-first distances from `sources`, optionally restricted to the
/// vertices for which `allowed` is true. Sources are always admitted.
pub(crate) fn bfs(inst: &Instance, sources: &[SubsetId], allowed: Option<&[bool]>) -> Vec<Option<usize>> {
    let mut dist = vec![None; inst.m()];
    let mut queue = VecDeque::new();
    for &s in sources {
        if dist[s.0].is_none() {
            dist[s.0] = Some(0);
            queue.push_back(s);
        }
    }
    while let Some(u) = queue.pop_front() {
        let du = dist[u.0].unwrap();
        for &v in inst.neighbors(u) {
            if dist[v.0].is_some() || allowed.is_some_and(|a| !a[v.0]) {
                continue;
            }
            dist[v.0] = Some(du + 1);
            queue.push_back(v);
        }
    }
    dist
}

/// Number of edges on a shortest `a`-`b` path, `None` when unreachable.
pub fn dist(inst: &Instance, a: SubsetId, b: SubsetId) -> Result<Option<usize>> {
    inst.check_id(a)?;
    inst.check_id(b)?;
    Ok(bfs(inst, &[a], None)[b.0])
}

/// Two distinct subsets are cover-adjacent when they share an element.
pub fn cover_adjacent(inst: &Instance, a: SubsetId, b: SubsetId) -> Result<bool> {
    inst.check_id(a)?;
    inst.check_id(b)?;
    if a == b {
        return Err(Error::SameSubset(a));
    }
    Ok(!inst.bits(a).is_disjoint(inst.bits(b)))
}

/// True iff `{a, b}` is an edge of the auxiliary graph.
pub fn graph_adjacent(inst: &Instance, a: SubsetId, b: SubsetId) -> Result<bool> {
    inst.check_id(a)?;
    inst.check_id(b)?;
    Ok(inst.neighbors(a).binary_search(&b).is_ok())
}

/// Maximum graph distance between two distinct cover-adjacent subsets.
///
/// Returns 1 when no pair of subsets intersects. Fails on a disconnected
/// graph.
pub fn cover_diameter(inst: &Instance) -> Result<usize> {
    if component_count(inst) != 1 {
        return Err(Error::Disconnected);
    }
    let mut best = 1;
    for a in inst.subset_ids() {
        let partners: Vec<SubsetId> = (a.0 + 1..inst.m())
            .map(SubsetId)
            .filter(|&b| !inst.bits(a).is_disjoint(inst.bits(b)))
            .collect();
        if partners.is_empty() {
            continue;
        }
        let d = bfs(inst, &[a], None);
        for b in partners {
            best = best.max(d[b.0].expect("connected graph"));
        }
    }
    Ok(best)
}

/// True iff `ids` is nonempty and induces a connected subgraph.
pub fn induced_connected(inst: &Instance, ids: &BTreeSet<SubsetId>) -> bool {
    let Some(&first) = ids.iter().next() else {
        return false;
    };
    let mut allowed = vec![false; inst.m()];
    for id in ids {
        allowed[id.0] = true;
    }
    let d = bfs(inst, &[first], Some(&allowed));
    ids.iter().all(|id| d[id.0].is_some())
}

pub(crate) fn component_count(inst: &Instance) -> usize {
    let mut seen = vec![false; inst.m()];
    let mut count = 0;
    for s in inst.subset_ids() {
        if seen[s.0] {
            continue;
        }
        count += 1;
        for (i, d) in bfs(inst, &[s], None).into_iter().enumerate() {
            if d.is_some() {
                seen[i] = true;
            }
        }
    }
    count
}

/// A path that starts at a selected subset and continues through
/// unselected subsets to `target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathCandidate {
    pub target: SubsetId,
    /// First vertex is in the selection, every later vertex is not.
    pub vertices: Vec<SubsetId>,
    /// Number of vertices outside the selection.
    pub length: usize,
    /// Elements covered by the path but not by the selection.
    pub new_coverage: BTreeSet<ElementId>,
}

/// Shortest-path forest grown from a selection through unselected vertices.
///
/// Queue order is ascending id per level and each vertex keeps its first
/// discovered predecessor, so the recovered path to any vertex is the
/// lexicographically smallest shortest one read from the selection outward.
pub(crate) struct SelectionForest {
    in_sel: Vec<bool>,
    pred: Vec<Option<SubsetId>>,
}

impl SelectionForest {
    pub(crate) fn grow(inst: &Instance, selection: &BTreeSet<SubsetId>) -> Self {
        let mut in_sel = vec![false; inst.m()];
        for s in selection {
            in_sel[s.0] = true;
        }
        let mut pred = vec![None; inst.m()];
        let mut queue: VecDeque<SubsetId> = selection.iter().copied().collect();
        while let Some(u) = queue.pop_front() {
            for &v in inst.neighbors(u) {
                if in_sel[v.0] || pred[v.0].is_some() {
                    continue;
                }
                pred[v.0] = Some(u);
                queue.push_back(v);
            }
        }
        Self { in_sel, pred }
    }

    pub(crate) fn contains(&self, id: SubsetId) -> bool {
        self.in_sel[id.0]
    }

    pub(crate) fn path(&self, inst: &Instance, target: SubsetId, covered: &FixedBitSet) -> Option<PathCandidate> {
        let mut vertices = vec![target];
        let mut cur = target;
        while !self.in_sel[cur.0] {
            cur = self.pred[cur.0]?;
            vertices.push(cur);
        }
        vertices.reverse();
        let mut gained = inst.union_bits(&vertices);
        gained.difference_with(covered);
        Some(PathCandidate {
            target,
            length: vertices.len() - 1,
            new_coverage: gained.ones().map(ElementId).collect(),
            vertices,
        })
    }
}

/// Shortest path from `selection` to `target` whose vertices after the
/// first lie outside the selection. New coverage is measured against the
/// union of the selection.
pub fn shortest_r_path(inst: &Instance, selection: &BTreeSet<SubsetId>, target: SubsetId) -> Result<PathCandidate> {
    inst.check_id(target)?;
    for &s in selection {
        inst.check_id(s)?;
    }
    if selection.is_empty() {
        return Err(Error::EmptySelection);
    }
    if selection.contains(&target) {
        return Err(Error::TargetInSelection(target));
    }
    let covered = inst.union_bits(selection);
    SelectionForest::grow(inst, selection)
        .path(inst, target, &covered)
        .ok_or(Error::Disconnected)
}
