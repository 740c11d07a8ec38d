//! Seeded random instances.
//!
//! All randomness comes from a PCG-64 (`Mcg128Xsl64`) stream seeded with
//! the configured 64-bit seed, so a seed fixes the instance on every
//! platform.

use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64Mcg;

use crate::error::{Error, Result};
use crate::graph::bfs;
use crate::instance::{Instance, SubsetId};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GraphKind {
    Complete,
    Path,
    /// Falls back to a path below three vertices.
    Cycle,
    /// Each pair joined independently with probability `q`.
    Gnp(f64),
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenConfig {
    pub n_elements: usize,
    pub m_subsets: usize,
    /// Probability that a given element joins a given subset.
    pub element_prob: f64,
    pub graph_kind: GraphKind,
    pub seed: u64,
    /// Patch coverage and connectivity so the result is feasible.
    pub ensure_feasible: bool,
}

fn check_prob(p: f64, what: &str) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidConfig(format!("{what} = {p} is not in [0, 1]")))
    }
}

pub fn gen_random(cfg: &GenConfig) -> Result<Instance> {
    if cfg.n_elements == 0 || cfg.m_subsets == 0 {
        return Err(Error::InvalidConfig("n and m must be at least 1".into()));
    }
    check_prob(cfg.element_prob, "element_prob")?;
    if let GraphKind::Gnp(q) = cfg.graph_kind {
        check_prob(q, "edge probability")?;
    }
    let (n, m) = (cfg.n_elements, cfg.m_subsets);
    let mut rng = Pcg64Mcg::seed_from_u64(cfg.seed);

    let mut subsets: Vec<Vec<usize>> = (0..m)
        .map(|_| (0..n).filter(|_| rng.gen_bool(cfg.element_prob)).collect())
        .collect();

    let mut edges = Vec::new();
    match cfg.graph_kind {
        GraphKind::Complete => {
            for u in 0..m {
                edges.extend((u + 1..m).map(|v| (u, v)));
            }
        }
        GraphKind::Path => edges.extend((1..m).map(|v| (v - 1, v))),
        GraphKind::Cycle => {
            edges.extend((1..m).map(|v| (v - 1, v)));
            if m >= 3 {
                edges.push((0, m - 1));
            }
        }
        GraphKind::Gnp(q) => {
            for u in 0..m {
                for v in u + 1..m {
                    if rng.gen_bool(q) {
                        edges.push((u, v));
                    }
                }
            }
        }
    }

    if cfg.ensure_feasible {
        let mut present = vec![false; n];
        for s in &subsets {
            for &e in s {
                present[e] = true;
            }
        }
        for e in (0..n).filter(|&e| !present[e]) {
            let s = rng.gen_range(0..m);
            subsets[s].push(e);
        }
        let partial = Instance::new(n, subsets.clone(), &edges)?;
        let comps = components(&partial);
        for pair in comps.windows(2) {
            let a = pair[0][rng.gen_range(0..pair[0].len())];
            let b = pair[1][rng.gen_range(0..pair[1].len())];
            edges.push((a, b));
        }
    }
    Instance::new(n, subsets, &edges)
}

/// Connected components, each sorted, ordered by smallest member.
fn components(inst: &Instance) -> Vec<Vec<usize>> {
    let mut seen = vec![false; inst.m()];
    let mut out = Vec::new();
    for s in 0..inst.m() {
        if seen[s] {
            continue;
        }
        let comp: Vec<usize> = bfs(inst, &[SubsetId(s)], None)
            .into_iter()
            .enumerate()
            .filter_map(|(i, d)| d.map(|_| i))
            .collect();
        for &i in &comp {
            seen[i] = true;
        }
        out.push(comp);
    }
    out
}
