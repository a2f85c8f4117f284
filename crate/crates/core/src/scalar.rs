//! Arbitrary-precision rational numbers.
//!
//! [`ExactScalar`] is a thin newtype over [`BigRational`]; the underlying type
//! already keeps values normalized (lowest terms, positive denominator), so all
//! arithmetic here is exact.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct ExactScalar(BigRational);

impl ExactScalar {
    pub fn zero() -> Self {
        ExactScalar(BigRational::zero())
    }

    pub fn one() -> Self {
        ExactScalar(BigRational::one())
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        ExactScalar(BigRational::from_integer(value.into()))
    }

    /// Builds `numer / denom`, reduced to lowest terms.
    ///
    /// Panics if `denom` is zero.
    pub fn ratio(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        ExactScalar(BigRational::new(numer.into(), denom.into()))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Always positive.
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// Nearest `f64` (may be infinite for huge values).
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn as_rational(&self) -> &BigRational {
        &self.0
    }

    pub fn into_rational(self) -> BigRational {
        self.0
    }
}

impl From<BigRational> for ExactScalar {
    fn from(value: BigRational) -> Self {
        ExactScalar(value)
    }
}

impl From<BigInt> for ExactScalar {
    fn from(value: BigInt) -> Self {
        ExactScalar::from_integer(value)
    }
}

impl From<i64> for ExactScalar {
    fn from(value: i64) -> Self {
        ExactScalar::from_integer(value)
    }
}

/// Decimal integer when the denominator is 1, `p/q` otherwise.
impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl FromStr for ExactScalar {
    type Err = Error;

    /// Accepts the same forms [`Display`](fmt::Display) produces. Input that
    /// is not in lowest terms is accepted and reduced.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::ParseScalar(s.to_string());
        let s_trim = s.trim();
        match s_trim.split_once('/') {
            None => {
                let n = BigInt::from_str(s_trim).map_err(|_| bad())?;
                Ok(ExactScalar::from_integer(n))
            }
            Some((p, q)) => {
                let n = BigInt::from_str(p).map_err(|_| bad())?;
                let d = BigInt::from_str(q).map_err(|_| bad())?;
                if d.is_zero() {
                    return Err(bad());
                }
                Ok(ExactScalar::ratio(n, d))
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: ExactScalar) -> ExactScalar {
                ExactScalar($trait::$method(self.0, rhs.0))
            }
        }

        impl<'a> $trait<&'a ExactScalar> for &'a ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                ExactScalar($trait::$method(&self.0, &rhs.0))
            }
        }

        impl<'a> $trait<&'a ExactScalar> for ExactScalar {
            type Output = ExactScalar;
            fn $method(self, rhs: &'a ExactScalar) -> ExactScalar {
                ExactScalar($trait::$method(self.0, &rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);
forward_binop!(Div, div);

impl AddAssign<&ExactScalar> for ExactScalar {
    fn add_assign(&mut self, rhs: &ExactScalar) {
        self.0 += &rhs.0;
    }
}

impl AddAssign for ExactScalar {
    fn add_assign(&mut self, rhs: ExactScalar) {
        self.0 += rhs.0;
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-self.0)
    }
}

impl Neg for &ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> ExactScalar {
        ExactScalar(-&self.0)
    }
}

impl Sum for ExactScalar {
    fn sum<I: Iterator<Item = ExactScalar>>(iter: I) -> Self {
        iter.fold(ExactScalar::zero(), |acc, x| acc + x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let x = ExactScalar::ratio(6, -4);
        assert_eq!(x.numer(), &BigInt::from(-3));
        assert_eq!(x.denom(), &BigInt::from(2));
        assert_eq!(x.to_string(), "-3/2");
    }

    #[test]
    fn integers_print_without_denominator() {
        assert_eq!(ExactScalar::ratio(10, 5).to_string(), "2");
        assert_eq!(ExactScalar::zero().to_string(), "0");
    }

    #[test]
    fn parse_accepts_display_forms() {
        assert_eq!("2/3".parse::<ExactScalar>().unwrap(), ExactScalar::ratio(2, 3));
        assert_eq!("-7".parse::<ExactScalar>().unwrap(), ExactScalar::from(-7));
        assert_eq!("4/6".parse::<ExactScalar>().unwrap(), ExactScalar::ratio(2, 3));
        assert!("1/0".parse::<ExactScalar>().is_err());
        assert!("abc".parse::<ExactScalar>().is_err());
    }

    #[test]
    fn arithmetic_is_exact() {
        let third = ExactScalar::ratio(1, 3);
        let sum = &(&third + &third) + &third;
        assert_eq!(sum, ExactScalar::one());
        assert!(ExactScalar::ratio(1, 3) < ExactScalar::ratio(1, 2));
        assert_eq!(-ExactScalar::ratio(1, 2) * ExactScalar::from(4), ExactScalar::from(-2));
    }
}
