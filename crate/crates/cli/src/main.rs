//! `kgraph`: validate k-graphs, find traces and ends, compute K-theory and
//! run the algebra and spectral checks. Reports go to stdout as JSON, a short
//! summary to stderr.

mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use kgraph_core::{AlgebraError, GraphError, KTheoryError, SpectralError, TraceError};
use serde_json::json;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Trace(#[from] TraceError),
    #[error(transparent)]
    KTheory(#[from] KTheoryError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

impl CliError {
    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Graph(_) => "graph",
            CliError::Algebra(_) => "algebra",
            CliError::Trace(_) => "trace",
            CliError::KTheory(_) => "ktheory",
            CliError::Spectral(_) => "spectral",
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "kgraph", version, about = "Higher-rank graph algebras: traces, K-theory and spectral checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GraphInput {
    /// Skeleton JSON file.
    file: Option<PathBuf>,
    /// Built-in graph: omega:k,m1,..,mk | lambda_n:n,tail | figure2:A|B[,width] | two_regime:A|B
    #[arg(long)]
    builder: Option<String>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the factorisation rules and report graph flags.
    Validate(GraphInput),
    /// Search for a faithful graph trace or report obstructions.
    Trace {
        #[command(flatten)]
        input: GraphInput,
        /// Also verify the trace equation at every level up to (n,..,n).
        #[arg(long)]
        full_check: Option<u32>,
    },
    /// Ends, end classes and the sufficient condition.
    Ends(GraphInput),
    /// End groups and K-theory ranks.
    Ktheory(GraphInput),
    /// Cuntz-Krieger, expectation, trace and finite-rank identity suites.
    AlgebraCheck {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long)]
        degree_cap: Option<u32>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Fit the logarithmic divergence of the torus resolvent sum.
    Dixmier {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        nmax: u32,
    },
    /// Index pairing with the Bott class.
    Pair {
        #[arg(long)]
        example: String,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 64)]
        grid: usize,
        /// Skip the truncated Toeplitz index cross-check.
        #[arg(long)]
        no_index: bool,
    },
}

fn dispatch(command: Command) -> Result<commands::Outcome, CliError> {
    let graph = |i: &GraphInput| input::resolve(i.file.as_deref(), i.builder.as_deref());
    match command {
        Command::Validate(i) => Ok(commands::validate(&graph(&i)?)),
        Command::Trace { input, full_check } => commands::trace(&graph(&input)?, full_check),
        Command::Ends(i) => Ok(commands::ends(&graph(&i)?)),
        Command::Ktheory(i) => commands::ktheory(&graph(&i)?),
        Command::AlgebraCheck {
            input,
            degree_cap,
            samples,
            seed,
        } => commands::algebra_check(&graph(&input)?, degree_cap, samples, seed),
        Command::Dixmier { k, nmax } => commands::dixmier(k, nmax),
        Command::Pair {
            example,
            n,
            grid,
            no_index,
        } => commands::pair(&example, n, grid, !no_index),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(out) => {
            println!("{}", serde_json::to_string_pretty(&out.report).expect("valid JSON"));
            eprintln!("{}", out.summary);
            if out.violation {
                eprintln!("property violation");
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            println!("{}", json!({"error": e.kind(), "message": e.to_string()}));
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
