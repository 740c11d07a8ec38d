//! Connected dominating set as a connected set cover.
//!
//! Vertex `v` of the input graph becomes subset `v`, holding the closed
//! neighbourhood of `v`; the auxiliary graph is the input graph itself.
//! Subset ids equal vertex ids, so lifting a solution back is the identity.

use std::collections::{BTreeSet, VecDeque};

use crate::error::{Error, Result};
use crate::instance::{Instance, Solution};

/// A simple undirected graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdsGraph {
    vertex_count: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl CdsGraph {
    pub fn new(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut set = BTreeSet::new();
        let mut adj = vec![Vec::new(); vertex_count];
        for &(u, v) in edges {
            for x in [u, v] {
                if x >= vertex_count {
                    return Err(Error::UnknownVertex { vertex: x, count: vertex_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            let key = (u.min(v), u.max(v));
            if !set.insert(key) {
                return Err(Error::DuplicateEdge(key.0, key.1));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self { vertex_count, edges: set, adj })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    /// Edges as `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// `{v} ∪ N(v)`, ascending.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut out = self.adj[v].clone();
        let at = out.partition_point(|&u| u < v);
        out.insert(at, v);
        out
    }

    /// Whether `vs` induces a connected subgraph (the empty set does not).
    pub fn induces_connected(&self, vs: &BTreeSet<usize>) -> bool {
        let Some(&start) = vs.iter().next() else {
            return false;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &w in &self.adj[u] {
                if vs.contains(&w) && seen.insert(w) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == vs.len()
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count > 0 && self.induces_connected(&(0..self.vertex_count).collect())
    }

    /// Whether every vertex is in `vs` or adjacent to a member of `vs`.
    pub fn dominates(&self, vs: &BTreeSet<usize>) -> bool {
        (0..self.vertex_count).all(|v| vs.contains(&v) || self.adj[v].iter().any(|u| vs.contains(u)))
    }
}

/// Builds the connected set cover instance whose optimum corresponds to a
/// minimum connected dominating set of `h`.
pub fn reduce_cds(h: &CdsGraph) -> Result<Instance> {
    if h.vertex_count() < 2 {
        return Err(Error::TooFewVertices(h.vertex_count()));
    }
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    let subsets = (0..h.vertex_count()).map(|v| h.closed_neighborhood(v)).collect();
    let edges: Vec<(usize, usize)> = h.edges().iter().copied().collect();
    Instance::new(h.vertex_count(), subsets, &edges)
}

/// Maps chosen subsets of a reduced instance back to vertices.
pub fn lift_solution(sol: &Solution) -> BTreeSet<usize> {
    sol.chosen.iter().map(|s| s.0).collect()
}
