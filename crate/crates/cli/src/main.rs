//! `mcsc`: command-line front end for the connected set cover toolkit.
//!
//! Exit codes: 0 on success, 1 on a negative solver-level result (an
//! invalid solution, an infeasible instance, or a deadlock when
//! `--strict` is given), 2 on usage, I/O or parse errors.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "mcsc", version, about = "Minimum connected set cover: greedy, exact oracles, bounds")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Where an instance or graph comes from.
#[derive(Args, Clone)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Input file (`-` for stdin).
    #[arg(short, long)]
    pub input: Option<PathBuf>,
    /// Built-in fixture: deadlock-counterexample, sample-cds, relay-path.
    #[arg(long)]
    pub fixture: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Algorithm {
    Modified,
    Original,
    Classic,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Problem {
    Setcover,
    Mcsc,
    Cds,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Graph {
    Complete,
    Path,
    Cycle,
    Gnp,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a random instance.
    Gen {
        #[arg(long)]
        elements: usize,
        #[arg(long)]
        subsets: usize,
        /// Probability that an element joins a subset.
        #[arg(long, default_value_t = 0.3)]
        prob: f64,
        #[arg(long, value_enum, default_value = "gnp")]
        graph: Graph,
        /// Edge probability for `--graph gnp`.
        #[arg(long, default_value_t = 0.3)]
        edge_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Skip the coverage and connectivity patching.
        #[arg(long)]
        no_patch: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run a greedy algorithm.
    Solve {
        #[arg(long, value_enum)]
        alg: Algorithm,
        #[command(flatten)]
        input: Input,
        /// Print every greedy step.
        #[arg(long)]
        trace: bool,
        /// Exit with status 1 when the original greedy deadlocks.
        #[arg(long)]
        strict: bool,
        /// Write the chosen subsets in solution format.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve exactly by exhaustive search.
    Exact {
        #[arg(long, value_enum)]
        problem: Problem,
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = 20)]
        max_subsets: usize,
        #[arg(long, default_value_t = 16)]
        max_vertices: usize,
    },
    /// Validate an instance and optionally a solution for it.
    Check {
        #[command(flatten)]
        input: Input,
        /// Solution file to check.
        #[arg(short, long)]
        solution: Option<PathBuf>,
    },
    /// Report the approximation bound quantities for an instance.
    Bound {
        #[command(flatten)]
        input: Input,
        /// Skip the exact oracles.
        #[arg(long)]
        no_oracles: bool,
        #[arg(long, default_value_t = 20)]
        max_subsets: usize,
    },
    /// Reduce a connected dominating set graph to an instance.
    ReduceCds {
        #[command(flatten)]
        input: Input,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check the bounds over a seeded corpus of random instances.
    Bench {
        #[arg(long, default_value_t = 1000)]
        instances: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Show the original greedy deadlocking where the corrected one succeeds.
    DemoDeadlock,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Gen {
            elements,
            subsets,
            prob,
            graph,
            edge_prob,
            seed,
            no_patch,
            output,
        } => commands::gen(elements, subsets, prob, graph, edge_prob, seed, !no_patch, output),
        Command::Solve {
            alg,
            input,
            trace,
            strict,
            output,
        } => commands::solve(alg, &input, trace, strict, output),
        Command::Exact {
            problem,
            input,
            max_subsets,
            max_vertices,
        } => commands::exact(problem, &input, max_subsets, max_vertices),
        Command::Check { input, solution } => commands::check(&input, solution),
        Command::Bound {
            input,
            no_oracles,
            max_subsets,
        } => commands::bound(&input, !no_oracles, max_subsets),
        Command::ReduceCds { input, output } => commands::reduce(&input, output),
        Command::Bench { instances, seed } => commands::bench(instances, seed),
        Command::DemoDeadlock => commands::demo_deadlock(),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
