//! Exact arbitrary-precision fractions.
//!
//! Every coefficient in this crate is a [`Rational`]: a fraction of
//! arbitrary-precision integers kept in lowest terms with a positive
//! denominator. No operation on this type ever rounds.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact fraction in lowest terms; denominator is always positive.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numer/denom`, normalizing sign and common factors.
    ///
    /// Panics if `denom` is zero; fallible division goes through
    /// [`Rational::checked_div`].
    pub fn new(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "rational denominator must be nonzero");
        Rational(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Exact division; `None` when `rhs` is zero.
    pub fn checked_div(&self, rhs: &Rational) -> Option<Rational> {
        if rhs.is_zero() {
            None
        } else {
            Some(Rational(&self.0 / &rhs.0))
        }
    }

    /// Division by a divisor known to be nonzero (recurrence denominators,
    /// factorial products). Panics on zero so a bad index is caught loudly.
    pub(crate) fn div_exact(&self, rhs: &Rational) -> Rational {
        self.checked_div(rhs)
            .expect("division by zero in exact arithmetic")
    }

    pub fn pow(&self, exp: u32) -> Rational {
        let mut acc = Rational::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Nearest `f64`. The only consumer is float-side diagnostics; all
    /// series arithmetic stays rational.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        Rational(&self.0 + &rhs.0)
    }
}

impl Add for Rational {
    type Output = Rational;
    fn add(self, rhs: Rational) -> Rational {
        &self + &rhs
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        Rational(&self.0 - &rhs.0)
    }
}

impl Sub for Rational {
    type Output = Rational;
    fn sub(self, rhs: Rational) -> Rational {
        &self - &rhs
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        Rational(&self.0 * &rhs.0)
    }
}

impl Mul for Rational {
    type Output = Rational;
    fn mul(self, rhs: Rational) -> Rational {
        &self * &rhs
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl fmt::Display for Rational {
    /// Renders as `p/q`, or just `p` for integers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Failure to read a rational from text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational literal: {}", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

impl FromStr for Rational {
    type Err = ParseRationalError;

    /// Accepts `p/q`, a bare integer, or a plain decimal such as `2.5`
    /// (parsed exactly, so `2.5` becomes `5/2`).
    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = || ParseRationalError(text.to_owned());
        let text = text.trim();
        if let Some((numer, denom)) = text.split_once('/') {
            let n: BigInt = numer.trim().parse().map_err(|_| bad())?;
            let d: BigInt = denom.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            return Ok(Rational(BigRational::new(n, d)));
        }
        if let Some((int_part, frac_part)) = text.split_once('.') {
            if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let negative = int_part.trim_start().starts_with('-');
            let int: BigInt = if int_part.is_empty() || int_part == "-" || int_part == "+" {
                BigInt::zero()
            } else {
                int_part.parse().map_err(|_| bad())?
            };
            let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
            let frac: BigInt = frac_part.parse().map_err(|_| bad())?;
            let mut numer = int * &scale;
            if negative {
                numer -= frac;
            } else {
                numer += frac;
            }
            return Ok(Rational(BigRational::new(numer, scale)));
        }
        let n: BigInt = text.parse().map_err(|_| bad())?;
        Ok(Rational::from_bigint(n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn addition_in_lowest_terms() {
        assert_eq!(&rat(1, 2) + &rat(-1, 6), rat(1, 3));
    }

    #[test]
    fn psi2_seventh_coefficient_sum() {
        // lcm(720, 1008) = 5040: -7/5040 - 5/5040 = -12/5040
        assert_eq!(&rat(-1, 720) + &rat(-1, 1008), rat(-1, 420));
    }

    #[test]
    fn total_order() {
        assert_eq!(rat(1, 240).cmp(&rat(1, 180)), Ordering::Less);
        assert!(rat(-1, 2) < rat(1, 3));
    }

    #[test]
    fn normalization() {
        assert_eq!(rat(2, -4), rat(-1, 2));
        assert_eq!(rat(6, 3), Rational::from_int(2));
        assert!(rat(-3, 6).denom() > &num_bigint::BigInt::from(0));
    }

    #[test]
    fn division_by_zero_is_explicit() {
        assert_eq!(rat(1, 2).checked_div(&Rational::zero()), None);
        assert_eq!(
            rat(1, 2).checked_div(&rat(3, 4)),
            Some(rat(2, 3))
        );
    }

    #[test]
    fn display_and_parse_round_trip() {
        assert_eq!(rat(-1, 2).to_string(), "-1/2");
        assert_eq!(Rational::from_int(7).to_string(), "7");
        assert_eq!("1/950400".parse::<Rational>().unwrap(), rat(1, 950400));
        assert_eq!("-5".parse::<Rational>().unwrap(), rat(-5, 1));
        assert_eq!("2.5".parse::<Rational>().unwrap(), rat(5, 2));
        assert_eq!("-0.25".parse::<Rational>().unwrap(), rat(-1, 4));
        assert_eq!("0.1".parse::<Rational>().unwrap(), rat(1, 10));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("1.".parse::<Rational>().is_err());
    }

    #[test]
    fn powers() {
        assert_eq!(rat(1, 2).pow(5), rat(1, 32));
        assert_eq!(rat(-2, 1).pow(3), rat(-8, 1));
        assert_eq!(rat(7, 3).pow(0), Rational::one());
    }
}
