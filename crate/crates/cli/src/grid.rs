//! Error grids: float evaluation of exact iterates against the exact
//! series truncation over a uniform grid in `r`.
//!
//! This is the one place in the whole artifact where floating point is
//! allowed: coefficients stay exact all the way here, and only the final
//! Horner evaluations and absolute differences run in `f64`.

use kgvim_core::{run, ExactSeries, IterationPath, IterationTrace, Poly, ProblemSpec, Rational};

use crate::config::GridConfig;
use crate::render::decimal17;
use crate::CliError;

/// One error column: a `(multiplier, iteration)` pair.
#[derive(Clone, Debug)]
pub struct GridColumn {
    pub label: String,
    pub errors: Vec<f64>,
    pub sup_error: f64,
}

/// The full grid: sample points plus one error column per pair.
#[derive(Clone, Debug)]
pub struct ErrorGrid {
    pub r_values: Vec<Rational>,
    pub columns: Vec<GridColumn>,
    pub exact_degree: usize,
}

impl ErrorGrid {
    /// Sup error for a multiplier name (`ps1`, `ps2`, `series:K`) and
    /// iteration, as laid out by [`build_grid`].
    pub fn sup_error(&self, multiplier: &str, iteration: usize) -> Option<f64> {
        let label = column_label(multiplier, iteration);
        self.columns
            .iter()
            .find(|c| c.label == label)
            .map(|c| c.sup_error)
    }
}

fn column_label(multiplier: &str, iteration: usize) -> String {
    format!("{multiplier}_iter{iteration}")
}

fn horner_f64(p: &Poly, x: f64) -> f64 {
    let mut acc = 0.0;
    for c in p.coeffs().iter().rev() {
        acc = acc * x + c.to_f64();
    }
    acc
}

/// The grid sample points: `points` uniform steps on `[0, R]`, extended by
/// mirroring to `[-R, R]` when `two_sided` is set (so the one-sided points
/// are a subset of the two-sided ones).
fn sample_points(config: &GridConfig) -> Vec<Rational> {
    let step_count = (config.points - 1) as i64;
    let indices: Vec<i64> = if config.two_sided {
        (-step_count..=step_count).collect()
    } else {
        (0..=step_count).collect()
    };
    indices
        .into_iter()
        .map(|i| {
            (&Rational::from_int(i) * &config.radius)
                .checked_div(&Rational::from_int(step_count))
                .expect("points >= 2")
        })
        .collect()
}

/// Runs every requested multiplier and evaluates per-iteration errors
/// against the exact series truncation chosen by the tolerance rule (or
/// the explicit override).
pub fn build_grid(config: &GridConfig) -> Result<ErrorGrid, CliError> {
    config.validate()?;
    let exact_degree = match config.exact_degree {
        Some(d) => d.max(2),
        None => ExactSeries::degree_for_radius(&config.radius),
    };
    let exact = ExactSeries::with_degree(exact_degree)
        .expect("degree at least 2")
        .to_poly();

    let r_values = sample_points(config);
    let r_floats: Vec<f64> = r_values.iter().map(Rational::to_f64).collect();
    let exact_values: Vec<f64> = r_floats.iter().map(|&x| horner_f64(&exact, x)).collect();

    let problem = ProblemSpec::airy();
    let mut columns = Vec::new();
    for multiplier in &config.multipliers {
        let trace: IterationTrace = run(
            &problem,
            multiplier,
            config.iterations,
            None,
            IterationPath::Oracle,
        )
        .map_err(CliError::Engine)?;
        for (n, profile) in trace.profiles().iter().enumerate() {
            let errors: Vec<f64> = r_floats
                .iter()
                .zip(&exact_values)
                .map(|(&x, &reference)| (horner_f64(profile, x) - reference).abs())
                .collect();
            let sup_error = errors.iter().cloned().fold(0.0, f64::max);
            columns.push(GridColumn {
                label: column_label(&multiplier.cli_name(), n),
                errors,
                sup_error,
            });
        }
    }
    Ok(ErrorGrid {
        r_values,
        columns,
        exact_degree,
    })
}

/// CSV layout: header `r,<label>...`, one row per sample point, and a
/// trailing `sup` row with the per-column sup errors. With a single
/// multiplier the labels reduce to `iter0..iterN`.
pub fn grid_csv(grid: &ErrorGrid, single_multiplier: bool) -> String {
    let mut out = String::from("r");
    for column in &grid.columns {
        let label = if single_multiplier {
            column
                .label
                .split_once("_")
                .map(|(_, it)| it.to_owned())
                .unwrap_or_else(|| column.label.clone())
        } else {
            column.label.clone()
        };
        out.push_str(&format!(",{label}"));
    }
    out.push('\n');
    for (i, r) in grid.r_values.iter().enumerate() {
        out.push_str(&decimal17(r));
        for column in &grid.columns {
            out.push_str(&format!(",{:e}", column.errors[i]));
        }
        out.push('\n');
    }
    out.push_str("sup");
    for column in &grid.columns {
        out.push_str(&format!(",{:e}", column.sup_error));
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use kgvim_core::MultiplierSpec;

    fn config(points: usize, two_sided: bool) -> GridConfig {
        GridConfig {
            multipliers: vec![MultiplierSpec::partial_sum_2()],
            iterations: 1,
            radius: Rational::from_int(2),
            points,
            two_sided,
            exact_degree: None,
            out: None,
        }
    }

    #[test]
    fn one_sided_grid_spans_zero_to_radius() {
        let grid = build_grid(&config(5, false)).unwrap();
        let rendered: Vec<String> = grid.r_values.iter().map(|r| r.to_string()).collect();
        assert_eq!(rendered, ["0", "1/2", "1", "3/2", "2"]);
    }

    #[test]
    fn two_sided_grid_mirrors_the_points() {
        let grid = build_grid(&config(3, true)).unwrap();
        let rendered: Vec<String> = grid.r_values.iter().map(|r| r.to_string()).collect();
        assert_eq!(rendered, ["-2", "-1", "0", "1", "2"]);
    }

    #[test]
    fn iteration_zero_error_vanishes_at_origin() {
        let grid = build_grid(&config(5, false)).unwrap();
        // first column is iteration 0; w0(0) = 1 = exact(0)
        assert!(grid.columns[0].errors[0].abs() < 1e-15);
        assert!(grid.columns[0].sup_error > 1.0);
    }

    #[test]
    fn sup_is_the_column_maximum() {
        let grid = build_grid(&config(9, false)).unwrap();
        for column in &grid.columns {
            let max = column.errors.iter().cloned().fold(0.0, f64::max);
            assert_eq!(column.sup_error, max);
        }
    }

    #[test]
    fn csv_shape() {
        let grid = build_grid(&config(3, false)).unwrap();
        let text = grid_csv(&grid, true);
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "r,iter0,iter1");
        assert_eq!(lines.len(), 1 + 3 + 1);
        assert!(lines[4].starts_with("sup,"));
    }

    #[test]
    fn rejects_degenerate_configs() {
        let mut bad = config(1, false);
        assert!(build_grid(&bad).is_err());
        bad = config(5, false);
        bad.radius = Rational::zero();
        assert!(build_grid(&bad).is_err());
        bad = config(5, false);
        bad.multipliers.clear();
        assert!(build_grid(&bad).is_err());
    }
}
