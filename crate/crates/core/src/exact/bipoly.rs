//! Sparse bivariate polynomials in `(s, r)` and the correction integral.
//!
//! The kernel `λ(s, r)` and every correction integrand live here. The one
//! operation that is not plain ring arithmetic is
//! [`BiPoly::integrate_s_zero_to_r`], the definite integral over `s` from
//! `0` to `r` that drives each iteration step.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul};

use super::poly::Poly;
use super::rational::Rational;

/// Bivariate polynomial keyed by `(s_degree, r_degree)`.
///
/// Zero coefficients are never stored, so term iteration is proportional to
/// the true support. A map keeps the representation sparse: correction
/// integrands have few terms relative to their bidegree box.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        let mut p = BiPoly::zero();
        p.add_term(0, 0, Rational::one());
        p
    }

    /// `s - r`, the seed for shifted-power expansion.
    pub fn s_minus_r() -> Self {
        let mut p = BiPoly::zero();
        p.add_term(1, 0, Rational::one());
        p.add_term(0, 1, Rational::new(-1, 1));
        p
    }

    /// Embeds a polynomial in `r` (all `s`-degrees zero).
    pub fn from_poly_in_r(p: &Poly) -> Self {
        let mut out = BiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, i, c.clone());
        }
        out
    }

    /// Reads a univariate polynomial as a function of `s`.
    pub fn from_poly_in_s(p: &Poly) -> Self {
        let mut out = BiPoly::zero();
        for (j, c) in p.coeffs().iter().enumerate() {
            out.add_term(j, 0, c.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `c · s^j r^i`, removing the entry if it cancels to zero.
    pub fn add_term(&mut self, s_degree: usize, r_degree: usize, c: Rational) {
        if c.is_zero() {
            return;
        }
        let key = (s_degree, r_degree);
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += &c;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, s_degree: usize, r_degree: usize) -> Rational {
        self.terms
            .get(&(s_degree, r_degree))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> BiPoly {
        let mut out = BiPoly::zero();
        if c.is_zero() {
            return out;
        }
        for (&(j, i), a) in &self.terms {
            out.add_term(j, i, a * c);
        }
        out
    }

    /// Partial derivative with respect to `s`.
    pub fn diff_s(&self) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(j, i), a) in &self.terms {
            if j > 0 {
                out.add_term(j - 1, i, a * &Rational::from_int(j as i64));
            }
        }
        out
    }

    /// Collapses `s` onto `r`: each `s^j r^i` becomes `r^{i+j}`.
    pub fn substitute_s_equals_r(&self) -> Poly {
        let width = self
            .terms
            .keys()
            .map(|&(j, i)| i + j + 1)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); width];
        for (&(j, i), a) in &self.terms {
            coeffs[i + j] += a;
        }
        Poly::from_coeffs(coeffs)
    }

    /// The correction integral: maps each monomial `s^j r^i` to
    /// `r^{i+j+1} / (j+1)` and sums. Exact, linear, and the only place the
    /// two variables merge back into one.
    pub fn integrate_s_zero_to_r(&self) -> Poly {
        let width = self
            .terms
            .keys()
            .map(|&(j, i)| i + j + 2)
            .max()
            .unwrap_or(0);
        let mut coeffs = vec![Rational::zero(); width];
        for (&(j, i), a) in &self.terms {
            coeffs[i + j + 1] += &a.div_exact(&Rational::from_int(j as i64 + 1));
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(j, i), a) in &rhs.terms {
            out.add_term(j, i, a.clone());
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(j1, i1), a) in &self.terms {
            for (&(j2, i2), b) in &rhs.terms {
                out.add_term(j1 + j2, i1 + i2, a * b);
            }
        }
        out
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(j, i), a) in &self.terms {
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "({a})")?;
            if j > 0 {
                write!(f, "*s^{j}")?;
            }
            if i > 0 {
                write!(f, "*r^{i}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly[{}]", self)
    }
}

/// Expands `Σ_n coeffs[n](r) · (s-r)^n` into the `(s, r)` monomial basis.
///
/// `coeffs[n]` is the polynomial-in-`r` coefficient of `(s-r)^n`; the powers
/// are built by repeated multiplication so the binomial signs come out
/// exactly.
pub fn expand_shifted_powers(coeffs: &[Poly]) -> BiPoly {
    let shift = BiPoly::s_minus_r();
    let mut shift_power = BiPoly::one();
    let mut acc = BiPoly::zero();
    for c in coeffs {
        if !c.is_zero() {
            acc = &acc + &(&BiPoly::from_poly_in_r(c) * &shift_power);
        }
        shift_power = &shift_power * &shift;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    fn poly(cs: &[(i64, i64)]) -> Poly {
        Poly::from_coeffs(cs.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    /// `(s - r)(1 + s)` as a reusable fixture.
    fn shift_times_one_plus_s() -> BiPoly {
        &BiPoly::s_minus_r() * &one_plus_s()
    }

    fn one_plus_s() -> BiPoly {
        let mut p = BiPoly::one();
        p.add_term(1, 0, Rational::one());
        p
    }

    #[test]
    fn product_expands_correctly() {
        // (s - r)(1 + s) = s + s^2 - r - r s
        let p = shift_times_one_plus_s();
        assert_eq!(p.coeff(1, 0), rat(1, 1));
        assert_eq!(p.coeff(2, 0), rat(1, 1));
        assert_eq!(p.coeff(0, 1), rat(-1, 1));
        assert_eq!(p.coeff(1, 1), rat(-1, 1));
        assert_eq!(p.num_terms(), 4);
    }

    #[test]
    fn multiplicative_identity() {
        let a = shift_times_one_plus_s();
        assert_eq!(&a * &BiPoly::one(), a);
    }

    #[test]
    fn squared_shift() {
        let sq = &BiPoly::s_minus_r() * &BiPoly::s_minus_r();
        assert_eq!(sq.coeff(2, 0), rat(1, 1));
        assert_eq!(sq.coeff(1, 1), rat(-2, 1));
        assert_eq!(sq.coeff(0, 2), rat(1, 1));
        assert_eq!(sq.num_terms(), 3);
    }

    #[test]
    fn integral_of_single_monomial() {
        // ∫0..r s ds = r^2/2, times the outer r
        let mut p = BiPoly::zero();
        p.add_term(1, 1, Rational::one());
        assert_eq!(p.integrate_s_zero_to_r(), Poly::monomial(3, rat(1, 2)));
    }

    #[test]
    fn integral_of_linear_kernel_times_residual() {
        // ∫0..r (s - r)(1 + s) ds = -r^2/2 - r^3/6
        let p = shift_times_one_plus_s();
        assert_eq!(
            p.integrate_s_zero_to_r(),
            poly(&[(0, 1), (0, 1), (-1, 2), (-1, 6)])
        );
    }

    #[test]
    fn integral_of_cubic_kernel_term() {
        // ∫0..r -(r/6)(s - r)^3 (1 + s) ds = r^5/24 + r^6/120
        let shift = BiPoly::s_minus_r();
        let cubed = &(&shift * &shift) * &shift;
        let integrand = &cubed.scale(&rat(-1, 6)) * &one_plus_s();
        // scale carries no r; multiply by r afterwards via a (0,1) term
        let mut times_r = BiPoly::zero();
        times_r.add_term(0, 1, Rational::one());
        let integrand = &integrand * &times_r;
        let expected = &Poly::monomial(5, rat(1, 24)) + &Poly::monomial(6, rat(1, 120));
        assert_eq!(integrand.integrate_s_zero_to_r(), expected);
    }

    #[test]
    fn shifted_expansion_of_plain_shift() {
        let out = expand_shifted_powers(&[Poly::zero(), Poly::one()]);
        assert_eq!(out, BiPoly::s_minus_r());
    }

    #[test]
    fn shifted_expansion_of_constant() {
        let c = poly(&[(3, 4)]);
        let out = expand_shifted_powers(std::slice::from_ref(&c));
        assert_eq!(out, BiPoly::from_poly_in_r(&c));
    }

    #[test]
    fn shifted_expansion_of_cubic_kernel() {
        // (s-r) - (r/6)(s-r)^3 = s - r - s^3 r/6 + s^2 r^2/2 - s r^3/2 + r^4/6
        let coeffs = [
            Poly::zero(),
            Poly::one(),
            Poly::zero(),
            Poly::monomial(1, rat(-1, 6)),
        ];
        let out = expand_shifted_powers(&coeffs);
        assert_eq!(out.coeff(1, 0), rat(1, 1));
        assert_eq!(out.coeff(0, 1), rat(-1, 1));
        assert_eq!(out.coeff(3, 1), rat(-1, 6));
        assert_eq!(out.coeff(2, 2), rat(1, 2));
        assert_eq!(out.coeff(1, 3), rat(-1, 2));
        assert_eq!(out.coeff(0, 4), rat(1, 6));
        assert_eq!(out.num_terms(), 6);
    }

    #[test]
    fn substitution_collapses_to_diagonal() {
        let p = shift_times_one_plus_s();
        // (r - r)(1 + r) = 0
        assert_eq!(p.substitute_s_equals_r(), Poly::zero());
        let q = one_plus_s();
        assert_eq!(q.substitute_s_equals_r(), poly(&[(1, 1), (1, 1)]));
    }

    #[test]
    fn s_derivative() {
        let p = shift_times_one_plus_s();
        // d/ds [s + s^2 - r - rs] = 1 + 2s - r
        let d = p.diff_s();
        assert_eq!(d.coeff(0, 0), rat(1, 1));
        assert_eq!(d.coeff(1, 0), rat(2, 1));
        assert_eq!(d.coeff(0, 1), rat(-1, 1));
        assert_eq!(d.num_terms(), 3);
    }
}
