use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use kgvim_cli::{
    cmd_errorgrid, cmd_run, cmd_verify, GridConfig, OutputFormat, RunConfig, VerifyConfig,
};
use kgvim_core::{IterationPath, MultiplierSpec, Rational};

/// Exact variational iteration for the linear-potential mode problem:
/// coefficient tables, convergence checks, and error grids.
#[derive(Parser)]
#[command(name = "kgvim", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run iterations and emit the exact coefficient table
    Run(RunArgs),
    /// Check the convergence claims on a computed trace (exit 2 on violation)
    Verify(VerifyArgs),
    /// Emit per-iteration error columns against the exact series on a grid
    Errorgrid(GridArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Multiplier: ps1, ps2, or series:K
    #[arg(long, default_value = "ps2")]
    multiplier: MultiplierSpec,
    /// Number of iterations
    #[arg(long)]
    iterations: usize,
    /// Optional truncation degree for the profiles
    #[arg(long)]
    max_degree: Option<usize>,
    /// Iteration path: oracle, recurrence, or both
    #[arg(long, default_value = "oracle")]
    path: IterationPath,
    /// Output format: csv or json
    #[arg(long, default_value = "csv")]
    format: OutputFormat,
    /// Output file (stdout when omitted); a .meta.json sidecar is written next to it
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Multiplier; must be ps2 (the claims are proved for the cubic partial sum)
    #[arg(long, default_value = "ps2")]
    multiplier: MultiplierSpec,
    /// Number of iterations to check
    #[arg(long)]
    iterations: usize,
    /// Optional truncation degree for the profiles
    #[arg(long)]
    max_degree: Option<usize>,
    /// Iteration path; defaults to both so the table is cross-checked
    #[arg(long, default_value = "both")]
    path: IterationPath,
    /// Output file for the JSON report (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct GridArgs {
    /// Multiplier to evaluate; repeat the flag to compare several
    #[arg(long = "multiplier", required = true)]
    multipliers: Vec<MultiplierSpec>,
    /// Number of iterations (columns run from iteration 0 upward)
    #[arg(long)]
    iterations: usize,
    /// Grid half-width; decimals are parsed exactly
    #[arg(long = "R")]
    radius: Rational,
    /// Number of grid points on [0, R]
    #[arg(long, default_value_t = 101)]
    points: usize,
    /// Mirror the grid to [-R, R]
    #[arg(long)]
    two_sided: bool,
    /// Exact-series degree override (default: tolerance rule)
    #[arg(long)]
    exact_degree: Option<usize>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => cmd_run(&RunConfig {
            multiplier: args.multiplier,
            iterations: args.iterations,
            max_degree: args.max_degree,
            path: args.path,
            format: args.format,
            out: args.out,
        })
        .map(|()| ExitCode::SUCCESS),
        Command::Verify(args) => cmd_verify(&VerifyConfig {
            multiplier: args.multiplier,
            iterations: args.iterations,
            max_degree: args.max_degree,
            path: args.path,
            out: args.out,
        })
        .map(|all_pass| {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                eprintln!("kgvim: convergence checks FAILED; see the report for violations");
                ExitCode::from(2)
            }
        }),
        Command::Errorgrid(args) => cmd_errorgrid(&GridConfig {
            multipliers: args.multipliers,
            iterations: args.iterations,
            radius: args.radius,
            points: args.points,
            two_sided: args.two_sided,
            exact_degree: args.exact_degree,
            out: args.out,
        })
        .map(|()| ExitCode::SUCCESS),
    };
    match outcome {
        Ok(code) => code,
        Err(error) => {
            eprintln!("kgvim: {error}");
            ExitCode::FAILURE
        }
    }
}
