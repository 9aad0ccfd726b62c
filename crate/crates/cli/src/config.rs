//! Validated command configurations.

use std::path::PathBuf;

use kgvim_core::{IterationPath, MultiplierSpec, Rational};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        match text {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("invalid format '{other}' (expected csv or json)")),
        }
    }
}

/// Configuration for the `run` subcommand.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub multiplier: MultiplierSpec,
    pub iterations: usize,
    pub max_degree: Option<usize>,
    pub path: IterationPath,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

/// Configuration for the `verify` subcommand.
#[derive(Clone, Debug)]
pub struct VerifyConfig {
    pub multiplier: MultiplierSpec,
    pub iterations: usize,
    pub max_degree: Option<usize>,
    pub path: IterationPath,
    pub out: Option<PathBuf>,
}

/// Configuration for the `errorgrid` subcommand.
#[derive(Clone, Debug)]
pub struct GridConfig {
    pub multipliers: Vec<MultiplierSpec>,
    pub iterations: usize,
    pub radius: Rational,
    pub points: usize,
    pub two_sided: bool,
    pub exact_degree: Option<usize>,
    pub out: Option<PathBuf>,
}

impl GridConfig {
    pub fn validate(&self) -> Result<(), CliError> {
        if self.multipliers.is_empty() {
            return Err(CliError::InvalidConfig(
                "errorgrid needs at least one --multiplier".into(),
            ));
        }
        if self.points < 2 {
            return Err(CliError::InvalidConfig(format!(
                "--points must be at least 2, got {}",
                self.points
            )));
        }
        if self.radius <= Rational::zero() {
            return Err(CliError::InvalidConfig(format!(
                "--R must be positive, got {}",
                self.radius
            )));
        }
        Ok(())
    }
}
