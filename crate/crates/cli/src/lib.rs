//! Command-line driver for the exact variational iteration engine:
//! coefficient tables, convergence-check reports, and error grids.

use std::fmt;
use std::path::Path;

pub mod commands;
pub mod config;
pub mod grid;
pub mod render;

pub use commands::{
    cmd_errorgrid, cmd_run, cmd_verify, grid_artifact, run_artifact, verify_artifact,
};
pub use config::{GridConfig, OutputFormat, RunConfig, VerifyConfig};
pub use grid::{build_grid, grid_csv, ErrorGrid, GridColumn};
pub use render::{decimal17, parse_table_json, run_csv, table_json};

/// Anything that can go wrong while driving the engine from the shell.
#[derive(Debug)]
pub enum CliError {
    InvalidConfig(String),
    Engine(kgvim_core::EngineError),
    Multiplier(kgvim_core::MultiplierError),
    Json(String),
    Io { path: String, source: std::io::Error },
}

impl CliError {
    fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.display().to_string(),
            source,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::InvalidConfig(message) => write!(f, "{message}"),
            CliError::Engine(e) => write!(f, "{e}"),
            CliError::Multiplier(e) => write!(f, "{e}"),
            CliError::Json(message) => write!(f, "{message}"),
            CliError::Io { path, source } => write!(f, "{path}: {source}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<kgvim_core::EngineError> for CliError {
    fn from(e: kgvim_core::EngineError) -> Self {
        CliError::Engine(e)
    }
}

impl From<kgvim_core::MultiplierError> for CliError {
    fn from(e: kgvim_core::MultiplierError) -> Self {
        CliError::Multiplier(e)
    }
}
