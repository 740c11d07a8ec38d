use std::collections::BTreeSet;
use std::fmt::{self, Display, Write as _};
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use mcsc_core::analysis::bench::run_bench;
use mcsc_core::analysis::build_report;
use mcsc_core::cds::{lift_solution, reduce_cds, CdsGraph};
use mcsc_core::exact::{min_cds, min_csc, min_set_cover, OracleLimits};
use mcsc_core::greedy::{classic_greedy_set_cover, modified_greedy, original_greedy, GreedyTrace, OriginalOutcome};
use mcsc_core::io::{
    builtin_fixture, fixtures, gen_random, parse_cds, parse_instance, parse_solution, write_cds, write_instance,
    write_solution, Fixture, GenConfig, GraphKind,
};
use mcsc_core::{check_solution, validate_instance, Instance, Solution, SubsetId};

use crate::{Algorithm, Graph, Input, Problem};

pub enum CliError {
    Io(PathBuf, io::Error),
    Usage(String),
    Core(mcsc_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) | CliError::Usage(_) => 2,
            CliError::Core(mcsc_core::Error::Parse { .. }) => 2,
            CliError::Core(mcsc_core::Error::UnknownFixture { .. }) => 2,
            CliError::Core(_) => 1,
        }
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(p, e) => write!(f, "{}: {e}", p.display()),
            CliError::Usage(msg) => f.write_str(msg),
            CliError::Core(e) => e.fmt(f),
        }
    }
}

impl From<mcsc_core::Error> for CliError {
    fn from(e: mcsc_core::Error) -> Self {
        CliError::Core(e)
    }
}

type CliResult = Result<ExitCode, CliError>;

fn read_text(path: &Path) -> Result<String, CliError> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| CliError::Io(path.to_path_buf(), e))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

fn emit(text: &str, output: Option<PathBuf>) -> Result<(), CliError> {
    match output {
        Some(p) => std::fs::write(&p, text).map_err(|e| CliError::Io(p, e)),
        None => io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::Io("<stdout>".into(), e)),
    }
}

/// Loads an instance; CDS fixtures are reduced first.
fn load_instance(input: &Input) -> Result<Instance, CliError> {
    match (&input.input, &input.fixture) {
        (Some(path), _) => Ok(parse_instance(&read_text(path)?)?),
        (None, Some(name)) => Ok(builtin_fixture(name)?.into_instance()?),
        (None, None) => Err(CliError::Usage("one of --input or --fixture is required".into())),
    }
}

fn load_cds(input: &Input) -> Result<CdsGraph, CliError> {
    match (&input.input, &input.fixture) {
        (Some(path), _) => Ok(parse_cds(&read_text(path)?)?),
        (None, Some(name)) => match builtin_fixture(name)? {
            Fixture::Cds(g) => Ok(g),
            Fixture::Instance(_) => Err(CliError::Usage(format!("fixture `{name}` is not a CDS graph"))),
        },
        (None, None) => Err(CliError::Usage("one of --input or --fixture is required".into())),
    }
}

fn join<T: Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn solution_lines(out: &mut String, sol: &Solution) {
    writeln!(out, "size={}", sol.size()).unwrap();
    writeln!(out, "chosen={}", join(&sol.chosen)).unwrap();
    writeln!(out, "covers_universe={}", sol.covers_universe).unwrap();
    writeln!(out, "induces_connected={}", sol.induces_connected).unwrap();
}

fn trace_lines(out: &mut String, trace: &GreedyTrace) {
    for (i, step) in trace.steps.iter().enumerate() {
        let path = step.path.as_ref().map_or_else(|| join(&step.added), |p| join(&p.vertices));
        let charge = step.charge.map_or_else(|| "none".to_string(), |c| c.to_string());
        writeln!(
            out,
            "step={i} kind={} path={path} covered={} charge={charge}",
            step.kind,
            join(&step.newly_covered)
        )
        .unwrap();
    }
}

#[allow(clippy::too_many_arguments)]
pub fn gen(
    elements: usize,
    subsets: usize,
    prob: f64,
    graph: Graph,
    edge_prob: f64,
    seed: u64,
    ensure_feasible: bool,
    output: Option<PathBuf>,
) -> CliResult {
    let graph_kind = match graph {
        Graph::Complete => GraphKind::Complete,
        Graph::Path => GraphKind::Path,
        Graph::Cycle => GraphKind::Cycle,
        Graph::Gnp => GraphKind::Gnp(edge_prob),
    };
    let inst = gen_random(&GenConfig {
        n_elements: elements,
        m_subsets: subsets,
        element_prob: prob,
        graph_kind,
        seed,
        ensure_feasible,
    })
    .map_err(|e| CliError::Usage(e.to_string()))?;
    emit(&write_instance(&inst), output)?;
    Ok(ExitCode::SUCCESS)
}

pub fn solve(alg: Algorithm, input: &Input, trace: bool, strict: bool, output: Option<PathBuf>) -> CliResult {
    let inst = load_instance(input)?;
    let mut out = String::new();
    let chosen: BTreeSet<SubsetId> = match alg {
        Algorithm::Modified => {
            let (sol, tr) = modified_greedy(&inst)?;
            out.push_str("algorithm=modified\nstatus=solved\n");
            if trace {
                trace_lines(&mut out, &tr);
            }
            solution_lines(&mut out, &sol);
            writeln!(out, "relay_count={}", tr.relay_count).unwrap();
            sol.chosen
        }
        Algorithm::Classic => {
            let sol = classic_greedy_set_cover(&inst)?;
            out.push_str("algorithm=classic\nstatus=solved\n");
            solution_lines(&mut out, &sol);
            sol.chosen
        }
        Algorithm::Original => match original_greedy(&inst)? {
            OriginalOutcome::Solved(sol) => {
                out.push_str("algorithm=original\nstatus=solved\n");
                solution_lines(&mut out, &sol);
                sol.chosen
            }
            OriginalOutcome::Deadlock { partial, uncovered } => {
                out.push_str("algorithm=original\nstatus=DEADLOCK\n");
                writeln!(out, "partial={}", join(&partial)).unwrap();
                writeln!(out, "uncovered={uncovered}").unwrap();
                emit(&out, None)?;
                return Ok(if strict { ExitCode::from(1) } else { ExitCode::SUCCESS });
            }
        },
    };
    emit(&out, None)?;
    if let Some(path) = output {
        emit(&write_solution(&chosen), Some(path))?;
    }
    Ok(ExitCode::SUCCESS)
}

pub fn exact(problem: Problem, input: &Input, max_subsets: usize, max_vertices: usize) -> CliResult {
    let limits = OracleLimits {
        max_subsets,
        max_vertices,
        cancel: None,
    };
    let mut out = String::new();
    match problem {
        Problem::Setcover | Problem::Mcsc => {
            let inst = load_instance(input)?;
            let (name, sol) = match problem {
                Problem::Setcover => ("setcover", min_set_cover(&inst, &limits)?),
                _ => ("mcsc", min_csc(&inst, &limits)?),
            };
            writeln!(out, "problem={name}").unwrap();
            solution_lines(&mut out, &sol);
        }
        Problem::Cds => {
            let h = load_cds(input)?;
            let set = min_cds(&h, &limits)?;
            out.push_str("problem=cds\n");
            writeln!(out, "size={}", set.len()).unwrap();
            writeln!(out, "vertices={}", join(&set)).unwrap();
        }
    }
    emit(&out, None)?;
    Ok(ExitCode::SUCCESS)
}

pub fn check(input: &Input, solution: Option<PathBuf>) -> CliResult {
    let inst = load_instance(input)?;
    let report = validate_instance(&inst);
    let mut out = String::new();
    writeln!(out, "feasible_cover={}", report.feasible_cover).unwrap();
    writeln!(out, "graph_connected={}", report.graph_connected).unwrap();
    for issue in &report.issues {
        writeln!(out, "issue={issue}").unwrap();
    }
    let mut ok = report.is_feasible();
    if let Some(path) = solution {
        let ids = parse_solution(&read_text(&path)?)?;
        let sol = check_solution(&inst, &ids)?;
        solution_lines(&mut out, &sol);
        writeln!(out, "valid_csc={}", sol.is_csc()).unwrap();
        ok &= sol.is_csc();
    }
    emit(&out, None)?;
    Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

pub fn bound(input: &Input, run_oracles: bool, max_subsets: usize) -> CliResult {
    let inst = load_instance(input)?;
    let limits = OracleLimits {
        max_subsets,
        ..OracleLimits::default()
    };
    let report = build_report(&inst, run_oracles, &limits)?;
    emit(&report.to_string(), None)?;
    Ok(ExitCode::SUCCESS)
}

pub fn reduce(input: &Input, output: Option<PathBuf>) -> CliResult {
    let h = load_cds(input)?;
    emit(&write_instance(&reduce_cds(&h)?), output)?;
    Ok(ExitCode::SUCCESS)
}

pub fn bench(instances: usize, seed: u64) -> CliResult {
    let run = run_bench(instances, seed, &OracleLimits::default())?;
    emit(&run.to_string(), None)?;
    Ok(ExitCode::SUCCESS)
}

pub fn demo_deadlock() -> CliResult {
    let inst = fixtures::deadlock_counterexample();
    let mut out = String::from("# instance\n");
    out.push_str(&write_instance(&inst));
    out.push_str("# original greedy (cover-adjacent candidates only)\n");
    match original_greedy(&inst)? {
        OriginalOutcome::Deadlock { partial, uncovered } => {
            out.push_str("status=DEADLOCK\n");
            writeln!(out, "partial={}", join(&partial)).unwrap();
            writeln!(out, "uncovered={uncovered}").unwrap();
        }
        OriginalOutcome::Solved(sol) => {
            out.push_str("status=solved\n");
            solution_lines(&mut out, &sol);
        }
    }
    out.push_str("# modified greedy (cover- or graph-adjacent candidates)\n");
    let (sol, trace) = modified_greedy(&inst)?;
    trace_lines(&mut out, &trace);
    solution_lines(&mut out, &sol);
    let cds = fixtures::sample_cds();
    let reduced = reduce_cds(&cds)?;
    let opt = min_csc(&reduced, &OracleLimits::default())?;
    out.push_str("# sample graph reduced to connected set cover\n");
    out.push_str(&write_cds(&cds));
    writeln!(out, "min_csc_size={}", opt.size()).unwrap();
    writeln!(out, "lifted_cds={}", join(lift_solution(&opt))).unwrap();
    emit(&out, None)?;
    Ok(ExitCode::SUCCESS)
}
