//! Construction of the Lagrange multiplier kernel `λ(s, r)`.
//!
//! The kernel solves `λ_ss + V(s)λ = 0` with `λ(r, r) = 0` and
//! `λ_s(r, r) = 1`. We build it in the shifted basis
//! `λ = Σ_n a_n(r) (s - r)^n`, where the boundary conditions pin
//! `a_0 = 0`, `a_1 = 1` and the ODE becomes a local recurrence
//!
//! ```text
//! a_{n+2}(r) = - ( Σ_j ṽ_j(r) · a_{n-j}(r) ) / ((n+1)(n+2))
//! ```
//!
//! with `ṽ_j(r)` the coefficients of the potential rewritten in powers of
//! `u = s - r`. For the linear potential `V(s) = s` this reduces to
//! `a_{n+2} = -(a_{n-1} + r·a_n) / ((n+1)(n+2))`, giving `a_2 = 0` and
//! `a_3 = -r/6`. The two closed partial sums used throughout are
//! `λ = s - r` and `λ = (s - r) - (r/6)(s - r)^3`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::exact::{expand_shifted_powers, BiPoly, Poly, Rational};

/// Which multiplier to build.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MultiplierKind {
    /// The linear partial sum `λ = s - r`.
    PartialSum1,
    /// The cubic partial sum `λ = (s - r) - (r/6)(s - r)^3`.
    PartialSum2,
    /// Truncated series solution of the kernel ODE through `(s - r)^K`.
    SeriesOrder(usize),
}

/// Validated multiplier request: a kind plus the potential it solves against.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiplierSpec {
    kind: MultiplierKind,
    potential: Poly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MultiplierError {
    /// `SeriesOrder(0)` cannot satisfy the slope condition `λ_s(r,r) = 1`.
    ZeroSeriesOrder,
    /// The closed partial sums are specific to the linear potential.
    PartialSumRequiresLinearPotential,
    /// Unrecognized multiplier string.
    Parse(String),
}

impl fmt::Display for MultiplierError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MultiplierError::ZeroSeriesOrder => {
                write!(f, "series multiplier order must be at least 1")
            }
            MultiplierError::PartialSumRequiresLinearPotential => {
                write!(f, "partial-sum multipliers are only defined for the potential V(s) = s")
            }
            MultiplierError::Parse(text) => {
                write!(f, "invalid multiplier '{text}' (expected ps1, ps2, or series:K)")
            }
        }
    }
}

impl std::error::Error for MultiplierError {}

impl MultiplierSpec {
    pub fn new(kind: MultiplierKind, potential: Poly) -> Result<Self, MultiplierError> {
        match kind {
            MultiplierKind::SeriesOrder(0) => Err(MultiplierError::ZeroSeriesOrder),
            MultiplierKind::PartialSum1 | MultiplierKind::PartialSum2
                if potential != Poly::variable() =>
            {
                Err(MultiplierError::PartialSumRequiresLinearPotential)
            }
            _ => Ok(MultiplierSpec { kind, potential }),
        }
    }

    /// `λ = s - r` for the linear potential.
    pub fn partial_sum_1() -> Self {
        MultiplierSpec {
            kind: MultiplierKind::PartialSum1,
            potential: Poly::variable(),
        }
    }

    /// `λ = (s - r) - (r/6)(s - r)^3` for the linear potential.
    pub fn partial_sum_2() -> Self {
        MultiplierSpec {
            kind: MultiplierKind::PartialSum2,
            potential: Poly::variable(),
        }
    }

    /// Series kernel of order `K` for the linear potential.
    pub fn series(order: usize) -> Result<Self, MultiplierError> {
        Self::new(MultiplierKind::SeriesOrder(order), Poly::variable())
    }

    /// Series kernel of order `K` for an arbitrary polynomial potential.
    pub fn series_with_potential(order: usize, potential: Poly) -> Result<Self, MultiplierError> {
        Self::new(MultiplierKind::SeriesOrder(order), potential)
    }

    pub fn kind(&self) -> &MultiplierKind {
        &self.kind
    }

    pub fn potential(&self) -> &Poly {
        &self.potential
    }

    /// The command-line name: `ps1`, `ps2`, or `series:K`.
    pub fn cli_name(&self) -> String {
        match self.kind {
            MultiplierKind::PartialSum1 => "ps1".to_owned(),
            MultiplierKind::PartialSum2 => "ps2".to_owned(),
            MultiplierKind::SeriesOrder(k) => format!("series:{k}"),
        }
    }
}

impl FromStr for MultiplierSpec {
    type Err = MultiplierError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        match text {
            "ps1" => Ok(MultiplierSpec::partial_sum_1()),
            "ps2" => Ok(MultiplierSpec::partial_sum_2()),
            _ => {
                let order = text
                    .strip_prefix("series:")
                    .and_then(|k| k.parse::<usize>().ok())
                    .ok_or_else(|| MultiplierError::Parse(text.to_owned()))?;
                MultiplierSpec::series(order)
            }
        }
    }
}

/// A constructed multiplier: the shifted-basis coefficients `a_n(r)` and
/// their expansion into `(s, r)` monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaKernel {
    shifted: Vec<Poly>,
    expanded: BiPoly,
    order: usize,
    potential: Poly,
}

impl LambdaKernel {
    /// Coefficient `a_n(r)` of `(s - r)^n`, for `n = 0..=order`.
    pub fn shifted_coeffs(&self) -> &[Poly] {
        &self.shifted
    }

    pub fn expanded(&self) -> &BiPoly {
        &self.expanded
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn potential(&self) -> &Poly {
        &self.potential
    }

    /// Residual of the kernel ODE, `∂²λ/∂s² + V(s)·λ`, as a bivariate
    /// polynomial. Zero for an exact multiplier; for a truncation of order
    /// `K` the support sits at shifted degrees `≥ K - 1`.
    pub fn ode_residual(&self) -> BiPoly {
        let second = self.expanded.diff_s().diff_s();
        let v_of_s = BiPoly::from_poly_in_s(&self.potential);
        &second + &(&v_of_s * &self.expanded)
    }
}

/// Binomial coefficient as a big integer (exact at every intermediate step).
fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from((n - i) as u64) / BigInt::from((i + 1) as u64);
    }
    acc
}

/// Rewrites `V(s)` in powers of `u = s - r`: returns `ṽ_j(r)` with
/// `V(u + r) = Σ_j ṽ_j(r) u^j`.
fn shift_potential(potential: &Poly) -> Vec<Poly> {
    let width = potential.len();
    let mut shifted = vec![Poly::zero(); width];
    for (t, v_t) in potential.coeffs().iter().enumerate() {
        if v_t.is_zero() {
            continue;
        }
        // (u + r)^t = Σ_j C(t, j) u^j r^{t-j}
        for (j, slot) in shifted.iter_mut().enumerate().take(t + 1) {
            let weight = Rational::from_bigint(binomial(t, j));
            let term = Poly::monomial(t - j, &weight * v_t);
            *slot = &*slot + &term;
        }
    }
    shifted
}

/// Builds the multiplier kernel for a validated spec.
///
/// Partial sums return their closed forms; a series order `K` runs the
/// shifted recurrence through index `K`. The recurrence is applied from
/// `n = 0` with out-of-range indices read as zero, which reproduces the
/// `a_2` value the boundary system forces (zero for the linear potential).
pub fn build_lambda(spec: &MultiplierSpec) -> LambdaKernel {
    let shifted = match spec.kind {
        MultiplierKind::PartialSum1 => vec![Poly::zero(), Poly::one()],
        MultiplierKind::PartialSum2 => vec![
            Poly::zero(),
            Poly::one(),
            Poly::zero(),
            Poly::monomial(1, Rational::new(-1, 6)),
        ],
        MultiplierKind::SeriesOrder(order) => {
            let v_shifted = shift_potential(spec.potential());
            let mut coeffs = vec![Poly::zero(), Poly::one()];
            // n + 2 runs through 2..=order
            for n in 0..order.saturating_sub(1) {
                let mut source = Poly::zero();
                for (j, v_j) in v_shifted.iter().enumerate().take(n + 1) {
                    source = &source + &(v_j * &coeffs[n - j]);
                }
                let scale = Rational::new(-1, ((n + 1) * (n + 2)) as i64);
                coeffs.push(source.scale(&scale));
            }
            coeffs
        }
    };
    let expanded = expand_shifted_powers(&shifted);
    let order = shifted.len() - 1;
    LambdaKernel {
        shifted,
        expanded,
        order,
        potential: spec.potential().clone(),
    }
}
