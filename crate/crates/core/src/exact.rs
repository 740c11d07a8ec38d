//! Exhaustive oracles for minimum set cover, minimum connected set cover
//! and minimum connected dominating set.
//!
//! Each search tries cardinalities in increasing order and enumerates
//! combinations lexicographically, so the returned witness is the
//! lexicographically smallest optimum.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::cds::CdsGraph;
use crate::error::{Error, Result};
use crate::instance::{solution_unchecked, validate_instance, Instance, Solution, SubsetId};

/// Shared flag for stopping a long search from another thread.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

#[derive(Debug, Clone)]
pub struct OracleLimits {
    /// Cap on the number of subsets for the cover searches.
    pub max_subsets: usize,
    /// Cap on the vertex count for the dominating set search.
    pub max_vertices: usize,
    pub cancel: Option<CancelToken>,
}

impl Default for OracleLimits {
    fn default() -> Self {
        Self {
            max_subsets: 20,
            max_vertices: 16,
            cancel: None,
        }
    }
}

impl OracleLimits {
    fn check(&self) -> Result<()> {
        if self.max_subsets == 0 || self.max_vertices == 0 {
            return Err(Error::InvalidLimits);
        }
        Ok(())
    }

    fn cancelled(&self) -> Result<()> {
        match &self.cancel {
            Some(t) if t.is_cancelled() => Err(Error::Cancelled),
            _ => Ok(()),
        }
    }
}

/// Induced connectivity of a vertex list under an adjacency function.
fn connected_under<'a>(members: &[usize], count: usize, neighbors: impl Fn(usize) -> &'a [usize]) -> bool {
    let Some(&start) = members.first() else {
        return false;
    };
    let mut inside = vec![false; count];
    for &v in members {
        inside[v] = true;
    }
    let mut seen = vec![false; count];
    seen[start] = true;
    let mut stack = vec![start];
    let mut reached = 1;
    while let Some(u) = stack.pop() {
        for &w in neighbors(u) {
            if inside[w] && !seen[w] {
                seen[w] = true;
                reached += 1;
                stack.push(w);
            }
        }
    }
    reached == members.len()
}

fn search_covers(inst: &Instance, limits: &OracleLimits, connected: bool) -> Result<Solution> {
    limits.check()?;
    let report = validate_instance(inst);
    if !report.feasible_cover || (connected && !report.graph_connected) {
        report.into_result(inst)?;
    }
    let m = inst.m();
    if m > limits.max_subsets {
        return Err(Error::OracleLimit {
            what: "subsets",
            got: m,
            cap: limits.max_subsets,
        });
    }
    let adj: Vec<Vec<usize>> = inst
        .subset_ids()
        .map(|s| inst.neighbors(s).iter().map(|t| t.0).collect())
        .collect();
    for k in 1..=m {
        for combo in (0..m).combinations(k) {
            limits.cancelled()?;
            let mut acc = FixedBitSet::with_capacity(inst.n());
            for &i in &combo {
                acc.union_with(inst.bits(SubsetId(i)));
            }
            if acc.count_ones(..) != inst.n() {
                continue;
            }
            if connected && !connected_under(&combo, m, |u| &adj[u]) {
                continue;
            }
            return Ok(solution_unchecked(inst, combo.into_iter().map(SubsetId).collect()));
        }
    }
    // the full family covers and is connected on a feasible instance
    unreachable!("feasible instance has a cover")
}

/// A minimum-cardinality set cover, ignoring the graph.
pub fn min_set_cover(inst: &Instance, limits: &OracleLimits) -> Result<Solution> {
    search_covers(inst, limits, false)
}

/// A minimum-cardinality connected set cover.
pub fn min_csc(inst: &Instance, limits: &OracleLimits) -> Result<Solution> {
    search_covers(inst, limits, true)
}

/// A minimum connected dominating set of `h`.
pub fn min_cds(h: &CdsGraph, limits: &OracleLimits) -> Result<BTreeSet<usize>> {
    limits.check()?;
    let n = h.vertex_count();
    if n < 2 {
        return Err(Error::TooFewVertices(n));
    }
    if n > limits.max_vertices {
        return Err(Error::OracleLimit {
            what: "vertices",
            got: n,
            cap: limits.max_vertices,
        });
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let closed: Vec<Vec<usize>> = (0..n).map(|v| h.closed_neighborhood(v)).collect();
    for k in 1..=n {
        for combo in (0..n).combinations(k) {
            limits.cancelled()?;
            let mut dominated = vec![false; n];
            for &v in &combo {
                for &u in &closed[v] {
                    dominated[u] = true;
                }
            }
            if dominated.iter().all(|&d| d) && connected_under(&combo, n, |u| h.neighbors(u)) {
                return Ok(combo.into_iter().collect());
            }
        }
    }
    unreachable!("a connected graph dominates itself")
}
