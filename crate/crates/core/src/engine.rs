//! The variational iteration engine.
//!
//! Profiles are polynomials `w(r)` obtained from the single-mode ansatz
//! `ψ(r, t) = e^{iωt} w(r)`, under which the time derivative contributes
//! `-ω²ψ` and the equation residual on profiles becomes
//! `w'' + (V(r) + ω²) w`. One iteration step is
//!
//! ```text
//! w_{n+1}(r) = w_n(r) + ∫0..r λ(s, r) · (w_n'' + (V + ω²) w_n)(s) ds
//! ```
//!
//! computed two ways:
//!
//! * the **oracle path** multiplies the kernel by the residual as bivariate
//!   polynomials and integrates symbolically — ground truth;
//! * the **fast path** ([`iterate_recurrence`]) updates the coefficient row
//!   directly through a closed recurrence, valid only for the cubic
//!   partial-sum kernel on the linear-potential unit-mode problem.
//!
//! Running with [`IterationPath::Both`] cross-checks the two column by
//! column and refuses to continue past a mismatch.

use std::fmt;
use std::str::FromStr;

use crate::exact::{BiPoly, Poly, Rational};
use crate::multiplier::{build_lambda, LambdaKernel, MultiplierKind, MultiplierSpec};

/// The initial value problem, reduced to a single temporal mode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProblemSpec {
    potential: Poly,
    mode_frequency: Rational,
    initial_value: Rational,
    initial_slope: Rational,
}

impl ProblemSpec {
    pub fn new(
        potential: Poly,
        mode_frequency: Rational,
        initial_value: Rational,
        initial_slope: Rational,
    ) -> Self {
        ProblemSpec {
            potential,
            mode_frequency,
            initial_value,
            initial_slope,
        }
    }

    /// The linear-potential instance: `V(r) = r`, unit mode frequency,
    /// `w(0) = 1`, `w'(0) = 0`. Its exact solution is the Airy-type series
    /// handled by the `reference` module.
    pub fn airy() -> Self {
        ProblemSpec {
            potential: Poly::variable(),
            mode_frequency: Rational::one(),
            initial_value: Rational::one(),
            initial_slope: Rational::zero(),
        }
    }

    /// True for the instance produced by [`ProblemSpec::airy`].
    pub fn is_airy(&self) -> bool {
        self == &ProblemSpec::airy()
    }

    pub fn potential(&self) -> &Poly {
        &self.potential
    }

    pub fn mode_frequency(&self) -> &Rational {
        &self.mode_frequency
    }

    pub fn initial_value(&self) -> &Rational {
        &self.initial_value
    }

    pub fn initial_slope(&self) -> &Rational {
        &self.initial_slope
    }

    /// `V + ω²`, the effective potential acting on profiles.
    pub fn effective_potential(&self) -> Poly {
        let omega_sq = &self.mode_frequency * &self.mode_frequency;
        &self.potential + &Poly::constant(omega_sq)
    }

    /// The constant initial guess `w_0 = w(0)`.
    pub fn initial_guess(&self) -> Poly {
        Poly::constant(self.initial_value.clone())
    }
}

/// Equation residual on a profile: `w'' + (V + ω²) w`, exact.
pub fn residual(w: &Poly, problem: &ProblemSpec) -> Poly {
    &w.second_derivative() + &(&problem.effective_potential() * w)
}

/// One oracle iteration: symbolic kernel-times-residual integration.
///
/// The integrand couples the kernel `λ(s, r)` with the residual re-read as
/// a function of `s`; the definite integral lands back in `r`. Degrees 0
/// and 1 of the input are never touched, so initial conditions survive
/// every step. An optional truncation degree drops higher coefficients
/// after the update.
pub fn iterate_oracle(
    w: &Poly,
    kernel: &LambdaKernel,
    problem: &ProblemSpec,
    truncation: Option<usize>,
) -> Poly {
    let residual_in_s = BiPoly::from_poly_in_s(&residual(w, problem));
    let correction = (kernel.expanded() * &residual_in_s).integrate_s_zero_to_r();
    let next = w + &correction;
    match truncation {
        Some(max_degree) => next.truncated(max_degree),
        None => next,
    }
}

/// Errors from the iteration engine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EngineError {
    /// The fast path needs at least the constant coefficient.
    EmptyRow,
    /// The fast path only covers the cubic partial-sum kernel on the
    /// linear-potential unit-mode problem.
    RecurrenceUnavailable,
    /// The two paths disagreed; carries the full evidence.
    CrossCheck(Box<Discrepancy>),
}

/// A column where the oracle and the recurrence disagreed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub iteration: usize,
    pub column: usize,
    pub oracle: Rational,
    pub recurrence: Rational,
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::EmptyRow => write!(f, "coefficient row is empty"),
            EngineError::RecurrenceUnavailable => write!(
                f,
                "recurrence path requires the ps2 multiplier on the linear-potential unit-mode problem"
            ),
            EngineError::CrossCheck(d) => write!(
                f,
                "oracle/recurrence mismatch at iteration {}, column {}: oracle {} vs recurrence {}",
                d.iteration, d.column, d.oracle, d.recurrence
            ),
        }
    }
}

impl std::error::Error for EngineError {}

/// One fast-path iteration on a coefficient row.
///
/// Columns `k >= 6` follow the closed recurrence
///
/// ```text
/// a'_k = (a_{k-6} + a_{k-5}) / ((k-1)(k-2)(k-3)(k-4))
///        + 2 a_{k-3} / (k(k-1)(k-2)) - a_{k-2} / (k(k-1))
/// ```
///
/// Columns 0..=5 are the header terms, where the factorial denominators of
/// the closed form degenerate; they come from evaluating the correction
/// integral at low degree, written over the residual combinations
/// `c_m = (m+2)(m+1) a_{m+2} + a_m + a_{m-1}`:
///
/// ```text
/// a'_0 = a_0            a'_2 = a_2 - c_0/2       a'_4 = a_4 - c_2/12
/// a'_1 = a_1            a'_3 = a_3 - c_1/6       a'_5 = a_5 - c_3/20 + c_0/24
/// ```
///
/// The output never extends more than six columns past the input.
pub fn iterate_recurrence(row: &[Rational]) -> Result<Vec<Rational>, EngineError> {
    if row.is_empty() {
        return Err(EngineError::EmptyRow);
    }
    let a = |i: i64| -> Rational {
        if i < 0 {
            Rational::zero()
        } else {
            row.get(i as usize).cloned().unwrap_or_else(Rational::zero)
        }
    };
    let c = |m: i64| -> Rational {
        let weight = Rational::from_int((m + 2) * (m + 1));
        &(&(&weight * &a(m + 2)) + &a(m)) + &a(m - 1)
    };
    let div = |x: Rational, d: i64| x.div_exact(&Rational::from_int(d));

    let mut out = Vec::with_capacity(row.len() + 6);
    out.push(a(0));
    out.push(a(1));
    out.push(&a(2) - &div(c(0), 2));
    out.push(&a(3) - &div(c(1), 6));
    out.push(&a(4) - &div(c(2), 12));
    out.push(&(&a(5) - &div(c(3), 20)) + &div(c(0), 24));
    for k in 6..(row.len() as i64 + 6) {
        let quartic = (k - 1) * (k - 2) * (k - 3) * (k - 4);
        let column = &(&div(&a(k - 6) + &a(k - 5), quartic)
            + &div(&Rational::from_int(2) * &a(k - 3), k * (k - 1) * (k - 2)))
            - &div(a(k - 2), k * (k - 1));
        out.push(column);
    }
    while out.last().is_some_and(Rational::is_zero) {
        out.pop();
    }
    Ok(out)
}

/// How `run` advances the trace.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IterationPath {
    Oracle,
    Recurrence,
    Both,
}

impl FromStr for IterationPath {
    type Err = String;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        match text {
            "oracle" => Ok(IterationPath::Oracle),
            "recurrence" => Ok(IterationPath::Recurrence),
            "both" => Ok(IterationPath::Both),
            other => Err(format!(
                "invalid path '{other}' (expected oracle, recurrence, or both)"
            )),
        }
    }
}

/// The full iteration history: profiles `w_0 ..= w_N` plus the
/// configuration that produced them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationTrace {
    profiles: Vec<Poly>,
    multiplier: MultiplierSpec,
    truncation_degree: Option<usize>,
}

impl IterationTrace {
    pub fn new(
        profiles: Vec<Poly>,
        multiplier: MultiplierSpec,
        truncation_degree: Option<usize>,
    ) -> Self {
        IterationTrace {
            profiles,
            multiplier,
            truncation_degree,
        }
    }

    pub fn profiles(&self) -> &[Poly] {
        &self.profiles
    }

    pub fn profile(&self, n: usize) -> &Poly {
        &self.profiles[n]
    }

    /// Number of iterations performed (profiles minus the initial guess).
    pub fn iterations(&self) -> usize {
        self.profiles.len().saturating_sub(1)
    }

    pub fn multiplier(&self) -> &MultiplierSpec {
        &self.multiplier
    }

    pub fn truncation_degree(&self) -> Option<usize> {
        self.truncation_degree
    }

    /// Width of the rectangular coefficient table.
    pub fn width(&self) -> usize {
        self.profiles.iter().map(Poly::len).max().unwrap_or(0)
    }

    /// The table `a_k^n`: row `n` is the coefficient list of profile `n`,
    /// zero-padded on the right to a common width.
    pub fn coefficient_table(&self) -> Vec<Vec<Rational>> {
        let width = self.width();
        self.profiles
            .iter()
            .map(|p| p.padded_coeffs(width))
            .collect()
    }
}

fn recurrence_applies(multiplier: &MultiplierSpec, problem: &ProblemSpec) -> bool {
    *multiplier.kind() == MultiplierKind::PartialSum2 && problem.is_airy()
}

/// Runs `n_iterations` steps from the constant initial guess `w(0)`.
///
/// With [`IterationPath::Both`] every recurrence row is checked against the
/// oracle row column by column; a mismatch aborts with the offending column
/// and both values rather than silently keeping either.
pub fn run(
    problem: &ProblemSpec,
    multiplier: &MultiplierSpec,
    n_iterations: usize,
    truncation: Option<usize>,
    path: IterationPath,
) -> Result<IterationTrace, EngineError> {
    run_from(
        problem.initial_guess(),
        problem,
        multiplier,
        n_iterations,
        truncation,
        path,
    )
}

/// Same as [`run`] but from an explicit initial profile. Only the constant
/// guess carries table expectations; other guesses are for exploration.
pub fn run_from(
    initial: Poly,
    problem: &ProblemSpec,
    multiplier: &MultiplierSpec,
    n_iterations: usize,
    truncation: Option<usize>,
    path: IterationPath,
) -> Result<IterationTrace, EngineError> {
    if matches!(path, IterationPath::Recurrence | IterationPath::Both)
        && !recurrence_applies(multiplier, problem)
    {
        return Err(EngineError::RecurrenceUnavailable);
    }

    let truncate_row = |mut row: Vec<Rational>| -> Vec<Rational> {
        if let Some(max_degree) = truncation {
            row.truncate(max_degree + 1);
            while row.last().is_some_and(Rational::is_zero) {
                row.pop();
            }
        }
        row
    };

    let mut profiles = Vec::with_capacity(n_iterations + 1);
    profiles.push(initial);

    match path {
        IterationPath::Oracle => {
            let kernel = build_lambda(multiplier);
            for _ in 0..n_iterations {
                let next = iterate_oracle(profiles.last().unwrap(), &kernel, problem, truncation);
                profiles.push(next);
            }
        }
        IterationPath::Recurrence => {
            for _ in 0..n_iterations {
                let row = profiles.last().unwrap().coeffs();
                if row.is_empty() {
                    return Err(EngineError::EmptyRow);
                }
                let next = truncate_row(iterate_recurrence(row)?);
                profiles.push(Poly::from_coeffs(next));
            }
        }
        IterationPath::Both => {
            let kernel = build_lambda(multiplier);
            for step in 0..n_iterations {
                let current = profiles.last().unwrap();
                let oracle = iterate_oracle(current, &kernel, problem, truncation);
                let recurrence = truncate_row(iterate_recurrence(current.coeffs())?);
                let width = oracle.len().max(recurrence.len());
                for column in 0..width {
                    let from_oracle = oracle.coeff(column);
                    let from_recurrence = recurrence
                        .get(column)
                        .cloned()
                        .unwrap_or_else(Rational::zero);
                    if from_oracle != from_recurrence {
                        return Err(EngineError::CrossCheck(Box::new(Discrepancy {
                            iteration: step + 1,
                            column,
                            oracle: from_oracle,
                            recurrence: from_recurrence,
                        })));
                    }
                }
                profiles.push(oracle);
            }
        }
    }

    Ok(IterationTrace::new(
        profiles,
        multiplier.clone(),
        truncation,
    ))
}
