//! Instance and solution data model.
//!
//! An [`Instance`] is the triple of a universe `0..n`, an ordered family of
//! `m` subsets, and a simple undirected auxiliary graph whose vertices are
//! the subsets. Elements and subsets are both dense 0-based ids.

use std::collections::BTreeSet;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph;

/// An element of the universe, `0 <= value < n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub usize);

/// A subset of the family (and a vertex of the auxiliary graph), `0 <= value < m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SubsetId(pub usize);

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for SubsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A connected set cover instance.
///
/// Construction checks structure only (ids in range, a simple graph).
/// Feasibility is reported separately by [`validate_instance`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    n: usize,
    subsets: Vec<Vec<ElementId>>,
    bits: Vec<FixedBitSet>,
    edges: BTreeSet<(SubsetId, SubsetId)>,
    adj: Vec<Vec<SubsetId>>,
}

impl Instance {
    /// Builds an instance from raw ids. Elements inside a subset are
    /// deduplicated and sorted; edges are unordered pairs.
    pub fn new(n: usize, subsets: Vec<Vec<usize>>, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyUniverse);
        }
        let m = subsets.len();
        if m == 0 {
            return Err(Error::NoSubsets);
        }
        let mut sets = Vec::with_capacity(m);
        let mut bits = Vec::with_capacity(m);
        for raw in subsets {
            let mut b = FixedBitSet::with_capacity(n);
            for &e in &raw {
                if e >= n {
                    return Err(Error::ElementOutOfRange { element: e, n });
                }
                b.insert(e);
            }
            sets.push(b.ones().map(ElementId).collect());
            bits.push(b);
        }
        let mut edge_set = BTreeSet::new();
        let mut adj = vec![Vec::new(); m];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= m {
                    return Err(Error::UnknownSubset { id: x, m });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (SubsetId(u.min(v)), SubsetId(u.max(v)));
            if !edge_set.insert(key) {
                return Err(Error::DuplicateEdge(key.0 .0, key.1 .0));
            }
            adj[u].push(SubsetId(v));
            adj[v].push(SubsetId(u));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            n,
            subsets: sets,
            bits,
            edges: edge_set,
            adj,
        })
    }

    /// Number of universe elements.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of subsets (vertices of the auxiliary graph).
    pub fn m(&self) -> usize {
        self.subsets.len()
    }

    /// Elements of subset `id`, sorted ascending.
    pub fn subset(&self, id: SubsetId) -> &[ElementId] {
        &self.subsets[id.0]
    }

    pub fn subsets(&self) -> &[Vec<ElementId>] {
        &self.subsets
    }

    pub(crate) fn bits(&self, id: SubsetId) -> &FixedBitSet {
        &self.bits[id.0]
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> &BTreeSet<(SubsetId, SubsetId)> {
        &self.edges
    }

    /// Graph neighbours of `id`, ascending.
    pub fn neighbors(&self, id: SubsetId) -> &[SubsetId] {
        &self.adj[id.0]
    }

    pub fn subset_ids(&self) -> impl Iterator<Item = SubsetId> + '_ {
        (0..self.m()).map(SubsetId)
    }

    /// Largest subset cardinality.
    pub fn gamma(&self) -> usize {
        self.subsets.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn check_id(&self, id: SubsetId) -> Result<()> {
        if id.0 < self.m() {
            Ok(())
        } else {
            Err(Error::UnknownSubset { id: id.0, m: self.m() })
        }
    }

    pub(crate) fn union_bits<'a>(&self, ids: impl IntoIterator<Item = &'a SubsetId>) -> FixedBitSet {
        let mut acc = FixedBitSet::with_capacity(self.n);
        for id in ids {
            acc.union_with(&self.bits[id.0]);
        }
        acc
    }
}

/// Outcome of checking a chosen family against an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub chosen: BTreeSet<SubsetId>,
    pub covers_universe: bool,
    pub induces_connected: bool,
}

impl Solution {
    /// True when the family is a connected set cover.
    pub fn is_csc(&self) -> bool {
        self.covers_universe && self.induces_connected
    }

    pub fn size(&self) -> usize {
        self.chosen.len()
    }
}

/// Feasibility diagnosis for an instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub feasible_cover: bool,
    pub graph_connected: bool,
    pub issues: Vec<String>,
}

impl ValidationReport {
    /// A connected set cover exists iff both checks pass.
    pub fn is_feasible(&self) -> bool {
        self.feasible_cover && self.graph_connected
    }

    pub(crate) fn into_result(self, inst: &Instance) -> Result<()> {
        if !self.feasible_cover {
            let all: Vec<SubsetId> = inst.subset_ids().collect();
            let covered = inst.union_bits(&all).count_ones(..);
            return Err(Error::InfeasibleCover { uncovered: inst.n() - covered });
        }
        if !self.graph_connected {
            return Err(Error::Disconnected);
        }
        Ok(())
    }
}

/// Reports whether the subsets cover the universe and whether the
/// auxiliary graph is connected. Never fails.
pub fn validate_instance(inst: &Instance) -> ValidationReport {
    let all: BTreeSet<SubsetId> = inst.subset_ids().collect();
    let union = inst.union_bits(&all);
    let mut issues = Vec::new();
    let uncovered: Vec<usize> = (0..inst.n()).filter(|&e| !union.contains(e)).collect();
    if !uncovered.is_empty() {
        issues.push(format!("elements not in any subset: {uncovered:?}"));
    }
    let graph_connected = graph::induced_connected(inst, &all);
    if !graph_connected {
        issues.push(format!(
            "auxiliary graph has {} components",
            graph::component_count(inst)
        ));
    }
    for (i, s) in inst.subsets().iter().enumerate() {
        if s.is_empty() {
            issues.push(format!("subset {i} is empty"));
        }
    }
    ValidationReport {
        feasible_cover: uncovered.is_empty(),
        graph_connected,
        issues,
    }
}

/// Union of the named subsets.
pub fn coverage_union(inst: &Instance, ids: &BTreeSet<SubsetId>) -> Result<BTreeSet<ElementId>> {
    for &id in ids {
        inst.check_id(id)?;
    }
    Ok(inst.union_bits(ids).ones().map(ElementId).collect())
}

/// Computes coverage and induced connectivity of `ids`.
pub fn check_solution(inst: &Instance, ids: &BTreeSet<SubsetId>) -> Result<Solution> {
    for &id in ids {
        inst.check_id(id)?;
    }
    Ok(solution_unchecked(inst, ids.clone()))
}

pub(crate) fn solution_unchecked(inst: &Instance, chosen: BTreeSet<SubsetId>) -> Solution {
    let covers_universe = inst.union_bits(&chosen).count_ones(..) == inst.n();
    let induces_connected = graph::induced_connected(inst, &chosen);
    Solution {
        chosen,
        covers_universe,
        induces_connected,
    }
}
