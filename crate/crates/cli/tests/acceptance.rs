//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.
//!
//! Run with `cargo test -p mcsc-cli --test acceptance`.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_pcg::Pcg64Mcg;

use mcsc_core::analysis::bench::{corpus_config, MAX_ELEMENTS, MAX_SUBSETS};
use mcsc_core::analysis::{audit_charges, harmonic, original_claimed_bound, ratio_bound};
use mcsc_core::cds::{lift_solution, reduce_cds, CdsGraph};
use mcsc_core::exact::{min_cds, min_csc, min_set_cover, OracleLimits};
use mcsc_core::graph::cover_diameter;
use mcsc_core::greedy::{classic_greedy_set_cover, modified_greedy, original_greedy, OriginalOutcome};
use mcsc_core::io::{fixtures, gen_random, parse_instance, write_instance, GenConfig, GraphKind};
use mcsc_core::{check_solution, SubsetId};

const CORPUS_SEED: u64 = 20_260_101;
const CORPUS_SIZE: usize = 1000;

type Outcome = Result<String, String>;

fn q(p: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(d))
}

fn int(v: usize) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

fn ids(v: &[usize]) -> BTreeSet<SubsetId> {
    v.iter().copied().map(SubsetId).collect()
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn c1_deadlock() -> Outcome {
    let inst = fixtures::deadlock_counterexample();
    let start = Instant::now();
    let out = original_greedy(&inst).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let OriginalOutcome::Deadlock { partial, .. } = out else {
        return Err("original greedy did not deadlock".into());
    };
    // subsets {1,2} and {2,3} in the 0-based fixture
    ensure!(partial == ids(&[0, 3]), "partial selection {partial:?}");
    ensure!(elapsed < Duration::from_millis(1), "took {elapsed:?}");
    Ok(format!("partial R = {{0, 3}} in {elapsed:?}"))
}

fn c2_counterexample() -> Outcome {
    let inst = fixtures::deadlock_counterexample();
    let (sol, trace) = modified_greedy(&inst).map_err(|e| e.to_string())?;
    let opt = min_csc(&inst, &OracleLimits::default()).map_err(|e| e.to_string())?;
    ensure!(sol.is_csc(), "greedy result is not a CSC");
    ensure!(sol.size() == 3, "size {}", sol.size());
    ensure!(trace.relay_count == 0, "relays {}", trace.relay_count);
    ensure!(opt.size() == 3, "optimum {}", opt.size());
    let sc = min_set_cover(&inst, &OracleLimits::default()).map_err(|e| e.to_string())?;
    let ratio = BigRational::new(BigInt::from(sol.size()), BigInt::from(sc.size()));
    let bound = ratio_bound(cover_diameter(&inst).unwrap(), inst.gamma());
    ensure!(ratio == q(1, 1), "ratio {ratio}");
    ensure!(bound == q(2, 1), "bound {bound}");
    ensure!(ratio <= bound, "ratio above bound");
    Ok("size 3 = MCSC optimum, ratio 1 <= 2".into())
}

struct CorpusStats {
    zero_relay: usize,
    relay_runs: usize,
    relay_violations: usize,
    bound_failures: Vec<usize>,
    audit_failures: Vec<usize>,
    order_failures: Vec<usize>,
    elapsed: Duration,
}

fn run_corpus() -> Result<CorpusStats, String> {
    let limits = OracleLimits::default();
    let start = Instant::now();
    let mut stats = CorpusStats {
        zero_relay: 0,
        relay_runs: 0,
        relay_violations: 0,
        bound_failures: Vec::new(),
        audit_failures: Vec::new(),
        order_failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for i in 0..CORPUS_SIZE {
        let cfg = corpus_config(CORPUS_SEED, i);
        ensure!(
            cfg.n_elements <= MAX_ELEMENTS && cfg.m_subsets <= MAX_SUBSETS && MAX_ELEMENTS <= 12 && MAX_SUBSETS <= 10,
            "instance {i} exceeds desk scale"
        );
        let inst = gen_random(&cfg).map_err(|e| e.to_string())?;
        let (sol, trace) = modified_greedy(&inst).map_err(|e| format!("instance {i}: {e}"))?;
        let sc = min_set_cover(&inst, &limits).map_err(|e| e.to_string())?;
        let csc = min_csc(&inst, &limits).map_err(|e| e.to_string())?;
        let d_c = cover_diameter(&inst).map_err(|e| e.to_string())?;
        let within = int(sol.size()) <= ratio_bound(d_c, inst.gamma()) * int(sc.size());
        if sc.size() > csc.size() {
            stats.order_failures.push(i);
        }
        if trace.relay_count > 0 {
            stats.relay_runs += 1;
            stats.relay_violations += usize::from(!within);
            continue;
        }
        stats.zero_relay += 1;
        if !within {
            stats.bound_failures.push(i);
        }
        let audit = audit_charges(&inst, &trace, &sc).map_err(|e| e.to_string())?;
        let exact_total = audit.total_charge == int(sol.size());
        if !(audit.accounting_ok && audit.per_subset_ok && exact_total) {
            stats.audit_failures.push(i);
        }
    }
    stats.elapsed = start.elapsed();
    Ok(stats)
}

fn c3_bound(s: &CorpusStats) -> Outcome {
    ensure!(s.zero_relay + s.relay_runs >= 1000, "corpus too small");
    ensure!(s.bound_failures.is_empty(), "bound violated on zero-relay instances {:?}", s.bound_failures);
    ensure!(s.elapsed <= Duration::from_secs(60), "corpus took {:?}", s.elapsed);
    Ok(format!(
        "{} zero-relay runs within bound; finding: {} relay runs, {} of them above the bound; {:?}",
        s.zero_relay, s.relay_runs, s.relay_violations, s.elapsed
    ))
}

fn c4_audit(s: &CorpusStats) -> Outcome {
    ensure!(s.audit_failures.is_empty(), "audit failed on {:?}", s.audit_failures);
    Ok(format!("charges sum to |R| and per-subset bounds hold on {} runs", s.zero_relay))
}

fn c5_order(s: &CorpusStats) -> Outcome {
    ensure!(s.order_failures.is_empty(), "|SC*| > |MCSC*| on {:?}", s.order_failures);
    Ok(format!("|SC*| <= |MCSC*| on {} instances", s.zero_relay + s.relay_runs))
}

fn c6_complete_graphs() -> Outcome {
    let mut rng = Pcg64Mcg::seed_from_u64(6);
    for i in 0..200 {
        let inst = gen_random(&GenConfig {
            n_elements: rng.gen_range(1..=15),
            m_subsets: rng.gen_range(1..=12),
            element_prob: rng.gen_range(0.1..0.6),
            graph_kind: GraphKind::Complete,
            seed: rng.gen(),
            ensure_feasible: true,
        })
        .map_err(|e| e.to_string())?;
        let (sol, trace) = modified_greedy(&inst).map_err(|e| e.to_string())?;
        let classic = classic_greedy_set_cover(&inst).map_err(|e| e.to_string())?;
        ensure!(sol.chosen == classic.chosen, "instance {i}: {:?} vs {:?}", sol.chosen, classic.chosen);
        ensure!(trace.relay_count == 0, "instance {i}: relays on complete graph");
        let d_c = cover_diameter(&inst).map_err(|e| e.to_string())?;
        ensure!(d_c == 1, "instance {i}: D_C = {d_c}");
    }
    Ok("200 complete-graph instances: identical to classic greedy, D_C = 1".into())
}

fn c7_cds() -> Outcome {
    let lim = OracleLimits::default();
    let h = fixtures::sample_cds();
    let inst = reduce_cds(&h).map_err(|e| e.to_string())?;
    let expected: [&[usize]; 8] = [
        &[0, 1, 3],
        &[1, 0, 2],
        &[2, 1, 3, 4, 5, 6],
        &[3, 0, 2, 6],
        &[4, 2, 7],
        &[5, 2],
        &[6, 2, 3],
        &[7, 4],
    ];
    for (i, want) in expected.iter().enumerate() {
        let want: BTreeSet<usize> = want.iter().copied().collect();
        let got: BTreeSet<usize> = inst.subset(SubsetId(i)).iter().map(|e| e.0).collect();
        ensure!(got == want, "subset {i}: {got:?}");
    }
    ensure!(cover_diameter(&inst) == Ok(2), "sample D_C");
    let csc = min_csc(&inst, &lim).map_err(|e| e.to_string())?;
    let cds = min_cds(&h, &lim).map_err(|e| e.to_string())?;
    ensure!(csc.size() == 3 && cds.len() == 3, "sizes {} / {}", csc.size(), cds.len());
    let lifted = lift_solution(&csc);
    ensure!(h.dominates(&lifted) && h.induces_connected(&lifted), "lifted {lifted:?} is not a CDS");

    let mut rng = Pcg64Mcg::seed_from_u64(7);
    for i in 0..100 {
        let v = rng.gen_range(2..=10);
        // a feasible generated instance has a connected graph on v vertices
        let skeleton = gen_random(&GenConfig {
            n_elements: 1,
            m_subsets: v,
            element_prob: 0.0,
            graph_kind: GraphKind::Gnp(rng.gen_range(0.0..0.6)),
            seed: rng.gen(),
            ensure_feasible: true,
        })
        .map_err(|e| e.to_string())?;
        let edges: Vec<(usize, usize)> = skeleton.edges().iter().map(|(a, b)| (a.0, b.0)).collect();
        let h = CdsGraph::new(v, &edges).map_err(|e| e.to_string())?;
        let inst = reduce_cds(&h).map_err(|e| e.to_string())?;
        let csc = min_csc(&inst, &lim).map_err(|e| e.to_string())?;
        let cds = min_cds(&h, &lim).map_err(|e| e.to_string())?;
        ensure!(csc.size() == cds.len(), "graph {i}: {} vs {}", csc.size(), cds.len());
        let d_c = cover_diameter(&inst).map_err(|e| e.to_string())?;
        ensure!(d_c == 1 || d_c == 2, "graph {i}: D_C = {d_c}");
    }
    Ok("sample subsets, D_C = 2, optima 3/3, lifted CDS valid; 100 random graphs agree".into())
}

fn c8_identities() -> Outcome {
    for d_c in 1..=5usize {
        for gamma in 1..=20usize {
            let gap = ratio_bound(d_c, gamma) - original_claimed_bound(d_c, gamma);
            ensure!(gap == int(d_c - 1), "gap at ({d_c}, {gamma}) = {gap}");
        }
    }
    ensure!(harmonic(3) == q(11, 6), "H(3) = {}", harmonic(3));
    ensure!(harmonic(5) == q(137, 60), "H(5) = {}", harmonic(5));
    Ok("gap = D_C - 1 on [1,5]x[1,20]; H(3) = 11/6; H(5) = 137/60".into())
}

fn c9_telescoping() -> Outcome {
    let mut rng = Pcg64Mcg::seed_from_u64(9);
    for i in 0..1000 {
        let len = rng.gen_range(1..=15);
        let mut seq: Vec<usize> = (0..len).map(|_| rng.gen_range(1..=200)).collect();
        seq.sort_unstable_by(|a, b| b.cmp(a));
        seq.dedup();
        let mut sum = q(0, 1);
        for (j, &nj) in seq.iter().enumerate() {
            let next = seq.get(j + 1).copied().unwrap_or(0);
            sum += q((nj - next) as i64, nj as i64);
        }
        ensure!(sum <= harmonic(seq[0]), "sequence {i} {seq:?}: {sum}");
    }
    Ok("1000 strictly decreasing sequences".into())
}

fn c10_determinism() -> Outcome {
    let mut rng = Pcg64Mcg::seed_from_u64(10);
    for i in 0..500 {
        let inst = gen_random(&GenConfig {
            n_elements: rng.gen_range(1..=20),
            m_subsets: rng.gen_range(1..=15),
            element_prob: rng.gen_range(0.0..0.7),
            graph_kind: GraphKind::Gnp(rng.gen_range(0.0..0.7)),
            seed: rng.gen(),
            ensure_feasible: rng.gen(),
        })
        .map_err(|e| e.to_string())?;
        let text = write_instance(&inst);
        let back = parse_instance(&text).map_err(|e| format!("instance {i}: {e}"))?;
        ensure!(back == inst && write_instance(&back) == text, "instance {i} did not round-trip");
    }
    let bench = || {
        Command::new(env!("CARGO_BIN_EXE_mcsc"))
            .args(["bench", "--instances", "200", "--seed", "11"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (bench()?, bench()?);
    ensure!(a.status.success() && b.status.success(), "bench exited with failure");
    ensure!(!a.stdout.is_empty() && a.stdout == b.stdout, "bench output differs between runs");
    Ok(format!("500 round-trips; two bench runs byte-identical ({} bytes)", a.stdout.len()))
}

fn main() -> ExitCode {
    let corpus = run_corpus();
    let from_corpus = |f: fn(&CorpusStats) -> Outcome| corpus.as_ref().map_err(Clone::clone).and_then(f);
    let results: Vec<(&str, Outcome)> = vec![
        ("1 deadlock reproduction", c1_deadlock()),
        ("2 corrected greedy on counterexample", c2_counterexample()),
        ("3 approximation bound (zero-relay runs)", from_corpus(c3_bound)),
        ("4 charge audit", from_corpus(c4_audit)),
        ("5 set cover optimum <= connected optimum", from_corpus(c5_order)),
        ("6 complete-graph degeneracy", c6_complete_graphs()),
        ("7 CDS reduction fidelity", c7_cds()),
        ("8 bound-formula identities", c8_identities()),
        ("9 telescoping inequality", c9_telescoping()),
        ("10 format and CLI determinism", c10_determinism()),
    ];
    let mut failed = 0;
    for (name, res) in &results {
        match res {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    // sanity: the oracle witness of the counterexample is a valid cover
    let witness = check_solution(&fixtures::deadlock_counterexample(), &ids(&[0, 3, 4])).unwrap();
    assert!(witness.is_csc());
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
