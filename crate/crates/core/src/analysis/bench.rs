//! Empirical bound checking over a seeded corpus of small instances.
//!
//! Instance `i` of a corpus depends only on `(seed, i)`. Runs are spread
//! over scoped worker threads and merged back in index order, so output
//! does not depend on scheduling.

use std::fmt;
use std::thread;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64Mcg;

use super::{audit_charges, build_report, fmt_rational, BoundReport, ChargeAudit};
use crate::error::Result;
use crate::exact::{min_set_cover, OracleLimits};
use crate::greedy::{modified_greedy, original_greedy, OriginalOutcome};
use crate::io::gen::{gen_random, GenConfig, GraphKind};

/// Largest universe in a corpus instance.
pub const MAX_ELEMENTS: usize = 12;
/// Largest family in a corpus instance.
pub const MAX_SUBSETS: usize = 10;

/// Generator settings for instance `index` of the corpus seeded by `seed`.
pub fn corpus_config(seed: u64, index: usize) -> GenConfig {
    let mut rng = Pcg64Mcg::seed_from_u64(seed.wrapping_add(index as u64));
    let n_elements = rng.gen_range(1..=MAX_ELEMENTS);
    let m_subsets = rng.gen_range(1..=MAX_SUBSETS);
    let element_prob = rng.gen_range(0.1..0.5);
    let graph_kind = match rng.gen_range(0..4) {
        0 => GraphKind::Complete,
        1 => GraphKind::Path,
        2 => GraphKind::Cycle,
        _ => GraphKind::Gnp(rng.gen_range(0.1..0.6)),
    };
    GenConfig {
        n_elements,
        m_subsets,
        element_prob,
        graph_kind,
        seed: rng.gen(),
        ensure_feasible: true,
    }
}

#[derive(Debug, Clone)]
pub struct BenchRecord {
    pub index: usize,
    pub report: BoundReport,
    pub audit: ChargeAudit,
    pub original_deadlocked: bool,
}

impl BenchRecord {
    pub fn run(index: usize, cfg: &GenConfig, limits: &OracleLimits) -> Result<Self> {
        let inst = gen_random(cfg)?;
        let report = build_report(&inst, true, limits)?;
        let (_, trace) = modified_greedy(&inst)?;
        let witness = min_set_cover(&inst, limits)?;
        let audit = audit_charges(&inst, &trace, &witness)?;
        let original_deadlocked = matches!(original_greedy(&inst)?, OriginalOutcome::Deadlock { .. });
        Ok(Self {
            index,
            report,
            audit,
            original_deadlocked,
        })
    }

    fn bound_ok(&self) -> bool {
        self.report.bound_satisfied == Some(true)
    }
}

impl fmt::Display for BenchRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.report;
        write!(
            f,
            "instance={} n={} m={} gamma={} d_c={} greedy={} sc_opt={} mcsc_opt={} relays={} ratio={} bound={} bound_ok={} accounting_ok={} per_subset_ok={} original={}",
            self.index,
            r.n,
            r.m,
            r.gamma,
            r.d_c,
            r.greedy_size,
            r.sc_opt_size.unwrap_or(0),
            r.mcsc_opt_size.unwrap_or(0),
            r.relay_count,
            r.ratio_vs_sc_opt.as_ref().map_or_else(|| "na".into(), fmt_rational),
            fmt_rational(&r.corrected_bound),
            self.bound_ok(),
            self.audit.accounting_ok,
            self.audit.per_subset_ok,
            if self.original_deadlocked { "deadlock" } else { "solved" },
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchSummary {
    pub instances: usize,
    pub max_ratio: BigRational,
    pub relay_runs: usize,
    pub violations_no_relay: usize,
    pub violations_relay: usize,
    pub audit_failures_no_relay: usize,
    pub deadlocks: usize,
}

impl BenchSummary {
    fn from_records(records: &[BenchRecord]) -> Self {
        let zero = BigRational::from_integer(BigInt::from(0));
        let mut s = Self {
            instances: records.len(),
            max_ratio: zero,
            relay_runs: 0,
            violations_no_relay: 0,
            violations_relay: 0,
            audit_failures_no_relay: 0,
            deadlocks: 0,
        };
        for rec in records {
            if let Some(r) = &rec.report.ratio_vs_sc_opt {
                if *r > s.max_ratio {
                    s.max_ratio = r.clone();
                }
            }
            let relayed = rec.report.relay_count > 0;
            s.relay_runs += relayed as usize;
            if !rec.bound_ok() {
                if relayed {
                    s.violations_relay += 1;
                } else {
                    s.violations_no_relay += 1;
                }
            }
            if !relayed && !(rec.audit.accounting_ok && rec.audit.per_subset_ok) {
                s.audit_failures_no_relay += 1;
            }
            s.deadlocks += rec.original_deadlocked as usize;
        }
        s
    }
}

impl fmt::Display for BenchSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "summary instances={}", self.instances)?;
        writeln!(f, "max_ratio={}", fmt_rational(&self.max_ratio))?;
        writeln!(f, "relay_runs={}", self.relay_runs)?;
        writeln!(f, "violations_no_relay={}", self.violations_no_relay)?;
        writeln!(f, "violations_relay={}", self.violations_relay)?;
        writeln!(f, "audit_failures_no_relay={}", self.audit_failures_no_relay)?;
        writeln!(f, "deadlocks={}", self.deadlocks)?;
        writeln!(f, "deadlock_rate={}/{}", self.deadlocks, self.instances)
    }
}

#[derive(Debug, Clone)]
pub struct BenchRun {
    pub records: Vec<BenchRecord>,
    pub summary: BenchSummary,
}

impl fmt::Display for BenchRun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.records {
            writeln!(f, "{r}")?;
        }
        write!(f, "{}", self.summary)
    }
}

/// Runs `instances` corpus instances from `seed`.
pub fn run_bench(instances: usize, seed: u64, limits: &OracleLimits) -> Result<BenchRun> {
    let workers = thread::available_parallelism().map_or(1, |n| n.get()).min(instances.max(1));
    let chunk = instances.div_ceil(workers).max(1);
    let results: Vec<Result<Vec<BenchRecord>>> = thread::scope(|scope| {
        let handles: Vec<_> = (0..instances)
            .step_by(chunk)
            .map(|start| {
                let end = (start + chunk).min(instances);
                scope.spawn(move || {
                    (start..end)
                        .map(|i| BenchRecord::run(i, &corpus_config(seed, i), limits))
                        .collect()
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("bench worker panicked")).collect()
    });
    let mut records = Vec::with_capacity(instances);
    for r in results {
        records.extend(r?);
    }
    let summary = BenchSummary::from_records(&records);
    Ok(BenchRun { records, summary })
}
