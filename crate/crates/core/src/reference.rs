//! Exact reference series and executable convergence checks.
//!
//! The exact profile of the linear-potential unit-mode problem is the
//! Airy-type series with coefficients
//!
//! ```text
//! α_0 = 1,  α_1 = 0,  α_2 = -1/2,
//! α_{n+2} = -(α_n + α_{n-1}) / ((n+1)(n+2))
//! ```
//!
//! Against this series the module classifies how far an iterate already
//! agrees ([`airy_prefix_length`]), checks the three convergence claims on
//! whole traces ([`check_lemmas`]), evaluates the pair-product coefficient
//! bound ([`bound_check`]), and measures the weighted tail of an iterate
//! ([`tail_mass`]). Every check runs in exact rational arithmetic; floats
//! never enter here.

use std::fmt;

use crate::engine::IterationTrace;
use crate::exact::{Poly, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ReferenceError {
    /// The series needs at least its three seed coefficients.
    DegreeTooSmall { requested: usize },
}

impl fmt::Display for ReferenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReferenceError::DegreeTooSmall { requested } => {
                write!(f, "exact series degree must be at least 2, got {requested}")
            }
        }
    }
}

impl std::error::Error for ReferenceError {}

/// Truncation of the exact solution series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSeries {
    coeffs: Vec<Rational>,
}

impl ExactSeries {
    /// Coefficients through degree `degree`; rejects `degree < 2`.
    pub fn with_degree(degree: usize) -> Result<Self, ReferenceError> {
        if degree < 2 {
            return Err(ReferenceError::DegreeTooSmall { requested: degree });
        }
        let mut coeffs = vec![Rational::one(), Rational::zero(), Rational::new(-1, 2)];
        extend_series(&mut coeffs, degree);
        Ok(ExactSeries { coeffs })
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `α_k`; panics past the stored degree.
    pub fn alpha(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn to_poly(&self) -> Poly {
        Poly::from_coeffs(self.coeffs.clone())
    }

    /// Re-checks the defining recursion at every stored index, independent
    /// of how the coefficients were filled in.
    pub fn recursion_holds(&self) -> bool {
        if self.coeffs[0] != Rational::one()
            || !self.coeffs[1].is_zero()
            || self.coeffs[2] != Rational::new(-1, 2)
        {
            return false;
        }
        for n in 1..=self.degree().saturating_sub(2) {
            let lhs = &self.coeffs[n + 2] * &Rational::from_int(((n + 1) * (n + 2)) as i64);
            let rhs = -&(&self.coeffs[n] + &self.coeffs[n - 1]);
            if lhs != rhs {
                return false;
            }
        }
        true
    }

    /// Smallest degree `D` at which `|α_D| R^D` and the three following
    /// terms all drop below `10^-14`, so a float evaluation of the
    /// truncation is exact to well past double precision.
    pub fn degree_for_radius(radius: &Rational) -> usize {
        // 10^-14 as an exact rational
        let threshold = Rational::new(1, 100_000_000_000_000);
        let radius = radius.abs();
        let mut coeffs = vec![Rational::one(), Rational::zero(), Rational::new(-1, 2)];
        let mut candidate = 2usize;
        loop {
            let needed = candidate + 3;
            if coeffs.len() <= needed {
                extend_series(&mut coeffs, needed);
            }
            let small = (candidate..=candidate + 3)
                .all(|k| &coeffs[k].abs() * &radius.pow(k as u32) < threshold);
            if small {
                return candidate;
            }
            candidate += 1;
        }
    }
}

fn extend_series(coeffs: &mut Vec<Rational>, degree: usize) {
    while coeffs.len() <= degree {
        let n = coeffs.len() - 2;
        let scale = Rational::new(-1, ((n + 1) * (n + 2)) as i64);
        let next = &(&coeffs[n] + &coeffs[n - 1]) * &scale;
        coeffs.push(next);
    }
}

/// Length of the leading coefficient block of `w` that already matches the
/// exact series: the largest `p` with `w_k = α_k` for all `k < p`, capped
/// at the stored length of `w`.
pub fn airy_prefix_length(w: &Poly, exact: &ExactSeries) -> usize {
    assert!(
        exact.degree() + 1 >= w.len(),
        "exact series shorter than the profile under test"
    );
    for (k, c) in w.coeffs().iter().enumerate() {
        if c != exact.alpha(k) {
            return k;
        }
    }
    w.len()
}

/// Per-step prefix-growth violation: the matched block must grow by at
/// least two columns per iteration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixViolation {
    pub step: usize,
    pub before: usize,
    pub after: usize,
}

/// Per-step support-growth violation: the degree may grow by at most six.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportViolation {
    pub step: usize,
    pub degree_before: Option<usize>,
    pub degree_after: Option<usize>,
}

/// A table entry with magnitude above one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MagnitudeViolation {
    pub iteration: usize,
    pub index: usize,
    pub value: Rational,
}

/// Outcome of the three trace-level convergence checks.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LemmaReport {
    pub prefix_lengths: Vec<usize>,
    pub prefix_violations: Vec<PrefixViolation>,
    pub support_violations: Vec<SupportViolation>,
    pub magnitude_violations: Vec<MagnitudeViolation>,
}

impl LemmaReport {
    pub fn prefix_growth_passes(&self) -> bool {
        self.prefix_violations.is_empty()
    }

    pub fn support_growth_passes(&self) -> bool {
        self.support_violations.is_empty()
    }

    pub fn magnitude_bound_passes(&self) -> bool {
        self.magnitude_violations.is_empty()
    }

    pub fn all_pass(&self) -> bool {
        self.prefix_growth_passes()
            && self.support_growth_passes()
            && self.magnitude_bound_passes()
    }
}

/// Runs the three convergence checks over a trace produced with the cubic
/// partial-sum kernel on the linear-potential unit-mode problem:
///
/// 1. the Airy prefix grows by at least two columns per step,
/// 2. the degree grows by at most six per step,
/// 3. every table entry has `|a_k^n| <= 1`.
///
/// Violations are returned as data, never raised as errors; an empty trace
/// or a single profile passes vacuously.
pub fn check_lemmas(trace: &IterationTrace, exact: &ExactSeries) -> LemmaReport {
    let prefix_lengths = trace
        .profiles()
        .iter()
        .map(|p| airy_prefix_length(p, exact))
        .collect();
    let mut report = LemmaReport {
        prefix_lengths,
        ..LemmaReport::default()
    };

    for (step, pair) in trace.profiles().windows(2).enumerate() {
        let before = report.prefix_lengths[step];
        let after = report.prefix_lengths[step + 1];
        if after < before + 2 {
            report.prefix_violations.push(PrefixViolation {
                step: step + 1,
                before,
                after,
            });
        }
        let degree_before = pair[0].degree();
        let degree_after = pair[1].degree();
        if degree_after.unwrap_or(0) > degree_before.unwrap_or(0) + 6 {
            report.support_violations.push(SupportViolation {
                step: step + 1,
                degree_before,
                degree_after,
            });
        }
    }

    let one = Rational::one();
    for (n, profile) in trace.profiles().iter().enumerate() {
        for (k, value) in profile.coeffs().iter().enumerate() {
            if value.abs() > one {
                report.magnitude_violations.push(MagnitudeViolation {
                    iteration: n,
                    index: k,
                    value: value.clone(),
                });
            }
        }
    }
    report
}

/// Observed per-step degree growth of a trace, for kernels without a proved
/// support bound. Returns the maximum of `deg(w_{n+1}) - deg(w_n)`.
pub fn observed_support_growth(trace: &IterationTrace) -> Option<usize> {
    trace
        .profiles()
        .windows(2)
        .map(|pair| {
            pair[1].degree().unwrap_or(0) as i64 - pair[0].degree().unwrap_or(0) as i64
        })
        .max()
        .map(|g| g.max(0) as usize)
}

/// The pair-product coefficient bound at index `k = 6m + a`:
/// `2^m / Π_{i=0..m-1} (k - 6i - 1)(k - 6i - 2)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundProfile {
    pub k: usize,
    pub m: usize,
    pub a: usize,
    pub bound_value: Rational,
}

impl BoundProfile {
    pub fn new(k: usize) -> Self {
        let m = k / 6;
        let a = k % 6;
        let mut denominator = Rational::one();
        for i in 0..m {
            let first = (k - 6 * i - 1) as i64;
            let second = (k - 6 * i - 2) as i64;
            denominator = &denominator * &Rational::from_int(first * second);
        }
        let bound_value = Rational::from_int(2).pow(m as u32).div_exact(&denominator);
        BoundProfile {
            k,
            m,
            a,
            bound_value,
        }
    }
}

/// One checked table entry for the pair-product bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundEntry {
    pub iteration: usize,
    pub index: usize,
    pub value: Rational,
    pub bound: Rational,
    pub pass: bool,
}

/// Pair-product bound evaluation over every table entry with index `>= 8`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BoundReport {
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }
}

/// Checks `|a_k^n| <=` pair-product bound for every entry with `k >= 8`,
/// returning the full per-entry data.
pub fn bound_check(trace: &IterationTrace) -> BoundReport {
    let width = trace.width();
    let bounds: Vec<BoundProfile> = (0..width).map(BoundProfile::new).collect();
    let mut entries = Vec::new();
    for (n, profile) in trace.profiles().iter().enumerate() {
        for (k, value) in profile.coeffs().iter().enumerate() {
            if k < 8 {
                continue;
            }
            let bound = &bounds[k].bound_value;
            entries.push(BoundEntry {
                iteration: n,
                index: k,
                value: value.clone(),
                bound: bound.clone(),
                pass: value.abs() <= *bound,
            });
        }
    }
    BoundReport { entries }
}

/// Weighted tail of a profile: `Σ_{k >= from_index} |w_k| R^k`, exact.
/// Zero when `from_index` lies past the stored coefficients.
pub fn tail_mass(w: &Poly, from_index: usize, radius: &Rational) -> Rational {
    if from_index >= w.len() {
        return Rational::zero();
    }
    let mut acc = Rational::zero();
    let mut power = radius.pow(from_index as u32);
    for c in w.coeffs().iter().skip(from_index) {
        if !c.is_zero() {
            acc += &(&c.abs() * &power);
        }
        power = &power * radius;
    }
    acc
}
