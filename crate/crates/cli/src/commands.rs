//! The three subcommands: `run`, `verify`, and `errorgrid`.
//!
//! Each command builds its artifact as a string first, then writes it to
//! `--out` or stdout. When a path is given, a `<path>.meta.json` sidecar
//! records the configuration and tool version; the data file itself stays
//! free of provenance so identical configs give identical bytes.

use std::fs;
use std::io::Write;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde_json::{json, Value};

use kgvim_core::{
    bound_check, check_lemmas, run, BoundReport, ExactSeries, IterationPath, LemmaReport,
    MultiplierKind, ProblemSpec,
};

use crate::config::{GridConfig, OutputFormat, RunConfig, VerifyConfig};
use crate::grid::{build_grid, grid_csv, ErrorGrid};
use crate::render::{run_csv, table_json};
use crate::CliError;

fn path_name(path: IterationPath) -> &'static str {
    match path {
        IterationPath::Oracle => "oracle",
        IterationPath::Recurrence => "recurrence",
        IterationPath::Both => "both",
    }
}

fn write_artifact(out: &Option<std::path::PathBuf>, data: &str, config: &Value) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, data).map_err(|e| CliError::io(path, e))?;
            write_sidecar(path, config)
        }
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle
                .write_all(data.as_bytes())
                .map_err(|e| CliError::io(Path::new("<stdout>"), e))
        }
    }
}

fn write_sidecar(data_path: &Path, config: &Value) -> Result<(), CliError> {
    let created = SystemTime::now()
        .duration_since(UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    let sidecar = json!({
        "tool": "kgvim",
        "version": env!("CARGO_PKG_VERSION"),
        "created_unix": created,
        "config": config,
    });
    let mut text = serde_json::to_string_pretty(&sidecar).expect("serializable");
    text.push('\n');
    let mut path = data_path.as_os_str().to_owned();
    path.push(".meta.json");
    let path = std::path::PathBuf::from(path);
    fs::write(&path, text).map_err(|e| CliError::io(&path, e))
}

fn run_config_value(config: &RunConfig) -> Value {
    json!({
        "command": "run",
        "multiplier": config.multiplier.cli_name(),
        "iterations": config.iterations,
        "max_degree": config.max_degree,
        "path": path_name(config.path),
        "format": match config.format { OutputFormat::Csv => "csv", OutputFormat::Json => "json" },
    })
}

/// Builds the `run` artifact (coefficient table) without touching the
/// filesystem.
pub fn run_artifact(config: &RunConfig) -> Result<String, CliError> {
    let trace = run(
        &ProblemSpec::airy(),
        &config.multiplier,
        config.iterations,
        config.max_degree,
        config.path,
    )
    .map_err(CliError::Engine)?;
    Ok(match config.format {
        OutputFormat::Csv => run_csv(&trace),
        OutputFormat::Json => table_json(run_config_value(config), &trace, None),
    })
}

/// `run`: emit the coefficient table for every iteration.
pub fn cmd_run(config: &RunConfig) -> Result<(), CliError> {
    let artifact = run_artifact(config)?;
    write_artifact(&config.out, &artifact, &run_config_value(config))
}

fn verify_config_value(config: &VerifyConfig) -> Value {
    json!({
        "command": "verify",
        "multiplier": config.multiplier.cli_name(),
        "iterations": config.iterations,
        "max_degree": config.max_degree,
        "path": path_name(config.path),
    })
}

/// Builds the `verify` artifact plus the two reports.
pub fn verify_artifact(
    config: &VerifyConfig,
) -> Result<(String, LemmaReport, BoundReport), CliError> {
    if *config.multiplier.kind() != MultiplierKind::PartialSum2 {
        return Err(CliError::InvalidConfig(format!(
            "verify requires --multiplier ps2: the convergence claims are proved for the cubic \
             partial sum, not for '{}'",
            config.multiplier.cli_name()
        )));
    }
    let trace = run(
        &ProblemSpec::airy(),
        &config.multiplier,
        config.iterations,
        config.max_degree,
        config.path,
    )
    .map_err(CliError::Engine)?;
    let exact_degree = trace
        .profiles()
        .iter()
        .filter_map(|p| p.degree())
        .max()
        .unwrap_or(0)
        .max(2);
    let exact = ExactSeries::with_degree(exact_degree).expect("degree at least 2");
    let lemmas = check_lemmas(&trace, &exact);
    let bounds = bound_check(&trace);
    let artifact = table_json(
        verify_config_value(config),
        &trace,
        Some((&lemmas, &bounds)),
    );
    Ok((artifact, lemmas, bounds))
}

/// `verify`: run the convergence checks; returns whether all three hold.
pub fn cmd_verify(config: &VerifyConfig) -> Result<bool, CliError> {
    let (artifact, lemmas, _bounds) = verify_artifact(config)?;
    write_artifact(&config.out, &artifact, &verify_config_value(config))?;
    Ok(lemmas.all_pass())
}

fn grid_config_value(config: &GridConfig, exact_degree: usize) -> Value {
    json!({
        "command": "errorgrid",
        "multipliers": config.multipliers.iter().map(|m| m.cli_name()).collect::<Vec<_>>(),
        "iterations": config.iterations,
        "radius": config.radius.to_string(),
        "points": config.points,
        "two_sided": config.two_sided,
        "exact_degree": exact_degree,
    })
}

/// Builds the `errorgrid` artifact and returns the grid for inspection.
pub fn grid_artifact(config: &GridConfig) -> Result<(String, ErrorGrid), CliError> {
    let grid = build_grid(config)?;
    let csv = grid_csv(&grid, config.multipliers.len() == 1);
    Ok((csv, grid))
}

/// `errorgrid`: emit per-iteration error columns over a uniform grid.
pub fn cmd_errorgrid(config: &GridConfig) -> Result<(), CliError> {
    let (artifact, grid) = grid_artifact(config)?;
    write_artifact(
        &config.out,
        &artifact,
        &grid_config_value(config, grid.exact_degree),
    )
}
