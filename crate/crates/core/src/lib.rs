//! Exact-arithmetic variational iteration for linear-potential
//! Klein-Gordon mode problems.
//!
//! The crate builds approximate solutions of
//!
//! ```text
//! ψ_rr - ψ_tt + V(r) ψ = 0,   ψ(0, t) = g(t),  ψ_r(0, t) = h(t)
//! ```
//!
//! for a single temporal mode `ψ = e^{iωt} w(r)`, by repeatedly correcting
//! a profile with the integral of its own equation residual against a
//! Lagrange multiplier kernel. Everything upstream of diagnostics runs in
//! exact rational arithmetic, so coefficient tables are reproducible to
//! the last digit.
//!
//! * [`exact`] — rationals, dense univariate and sparse bivariate
//!   polynomials, and the correction integral.
//! * [`multiplier`] — kernels `λ(s, r)`: closed partial sums for the
//!   linear potential and truncated series solutions for polynomial
//!   potentials.
//! * [`engine`] — the iteration itself, via symbolic integration and via a
//!   closed coefficient recurrence, with column-level cross-checking.
//! * [`reference`] — the exact Airy-type series and executable convergence
//!   checks over iteration traces.

pub mod engine;
pub mod exact;
pub mod multiplier;
pub mod reference;

pub use engine::{
    iterate_oracle, iterate_recurrence, residual, run, run_from, Discrepancy, EngineError,
    IterationPath, IterationTrace, ProblemSpec,
};
pub use exact::{expand_shifted_powers, BiPoly, ParseRationalError, Poly, Rational};
pub use multiplier::{
    build_lambda, LambdaKernel, MultiplierError, MultiplierKind, MultiplierSpec,
};
pub use reference::{
    airy_prefix_length, bound_check, check_lemmas, observed_support_growth, tail_mass,
    BoundEntry, BoundProfile, BoundReport, ExactSeries, LemmaReport, MagnitudeViolation,
    PrefixViolation, ReferenceError, SupportViolation,
};
