//! Exact rational and polynomial arithmetic.
//!
//! All types here are immutable values after construction and all
//! operations are pure, so they can be shared freely across threads.

mod bipoly;
mod poly;
mod rational;

pub use bipoly::{expand_shifted_powers, BiPoly};
pub use poly::Poly;
pub use rational::{ParseRationalError, Rational};
