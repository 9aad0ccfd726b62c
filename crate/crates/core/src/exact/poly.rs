//! Dense univariate polynomials over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::rational::Rational;

/// Dense polynomial in one variable, coefficient of degree `k` at index `k`.
///
/// The zero polynomial is the empty coefficient list; a stored trailing
/// coefficient is always nonzero. Degree queries on zero return `None`
/// rather than overloading an integer sentinel.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// The identity polynomial (the series variable itself).
    pub fn variable() -> Self {
        Poly::from_coeffs(vec![Rational::zero(), Rational::one()])
    }

    pub fn monomial(degree: usize, c: Rational) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Poly { coeffs }
    }

    /// Builds from a coefficient list, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Rational::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Number of stored coefficients (degree + 1, or 0 for zero).
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of degree `k`; zero beyond the stored length.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient list zero-padded on the right to `width` entries.
    pub fn padded_coeffs(&self, width: usize) -> Vec<Rational> {
        let mut row = self.coeffs.clone();
        row.resize(width.max(row.len()), Rational::zero());
        row
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a * &Rational::from_int(k as i64))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Exact second derivative: degree `j` picks up `(j+2)(j+1)` times the
    /// degree `j+2` input coefficient.
    pub fn second_derivative(&self) -> Poly {
        self.derivative().derivative()
    }

    /// Horner evaluation at an exact point.
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for a in self.coeffs.iter().rev() {
            acc = &(&acc * x) + a;
        }
        acc
    }

    /// Drops all coefficients above `max_degree`.
    pub fn truncated(&self, max_degree: usize) -> Poly {
        if self.coeffs.len() <= max_degree + 1 {
            return self.clone();
        }
        Poly::from_coeffs(self.coeffs[..=max_degree].to_vec())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let width = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..width).map(|k| &self.coeff(k) + &rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let width = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..width).map(|k| &self.coeff(k) - &rhs.coeff(k)).collect();
        Poly::from_coeffs(coeffs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += &(a * b);
            }
        }
        Poly::from_coeffs(coeffs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " {} ", if a.is_negative() { "-" } else { "+" })?;
            }
            let mag = if first { a.clone() } else { a.abs() };
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != Rational::one() {
                        write!(f, "{mag}*")?;
                    }
                    write!(f, "r^{k}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self)
    }
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

    #[test]
    fn product_of_conjugates() {
        let p = poly(&[(1, 1), (1, 1)]);
        let q = poly(&[(1, 1), (-1, 1)]);
        assert_eq!(&p * &q, poly(&[(1, 1), (0, 1), (-1, 1)]));
    }

    #[test]
    fn additive_identity() {
        let p = poly(&[(3, 7), (0, 1), (-2, 5)]);
        assert_eq!(&p + &Poly::zero(), p);
    }

    #[test]
    fn scaling_a_monomial() {
        let cube = Poly::monomial(3, Rational::one());
        assert_eq!(cube.scale(&rat(-1, 6)), Poly::monomial(3, rat(-1, 6)));
    }

    #[test]
    fn second_derivative_of_quintic_term() {
        // r^5/24 -> 5*4/24 r^3 = 5 r^3 / 6
        let p = Poly::monomial(5, rat(1, 24));
        assert_eq!(p.second_derivative(), Poly::monomial(3, rat(5, 6)));
    }

    #[test]
    fn second_derivative_of_constant() {
        assert_eq!(Poly::one().second_derivative(), Poly::zero());
    }

    #[test]
    fn second_derivative_term_by_term() {
        // 1 - r^2/2 - r^3/6 -> -1 - r
        let p = poly(&[(1, 1), (0, 1), (-1, 2), (-1, 6)]);
        assert_eq!(p.second_derivative(), poly(&[(-1, 1), (-1, 1)]));
    }

    #[test]
    fn zero_polynomial_has_no_degree() {
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(poly(&[(0, 1), (0, 1)]), Poly::zero());
        assert_eq!(poly(&[(1, 1), (0, 1)]).degree(), Some(0));
    }

    #[test]
    fn exact_evaluation() {
        let p = poly(&[(1, 1), (0, 1), (-1, 2)]);
        assert_eq!(p.eval(&rat(1, 3)), rat(17, 18));
        assert_eq!(Poly::zero().eval(&rat(5, 1)), Rational::zero());
    }

    #[test]
    fn truncation_drops_high_terms() {
        let p = poly(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        assert_eq!(p.truncated(1), poly(&[(1, 1), (2, 1)]));
        assert_eq!(p.truncated(9), p);
    }
}
