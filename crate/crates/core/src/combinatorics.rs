//! Exact factorial-type quantities over big integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// `n!` by plain iteration.
pub fn factorial(n: usize) -> BigInt {
    (2..=n).map(BigInt::from).product()
}

/// `j·(j−2)·…·1` for odd `j > 0`; the empty product 1 for `j = −1`.
pub fn double_factorial(j: i64) -> Result<BigInt> {
    if j == -1 {
        return Ok(BigInt::one());
    }
    if j < -1 || j % 2 == 0 {
        return Err(Error::DoubleFactorialDomain(j));
    }
    Ok((1..=j).step_by(2).map(BigInt::from).product())
}

/// `(degree + order)! / (order! · (degree − order)!)`, the boundary value of
/// the `order`-th derivative of P_degree at x = 1 with its `2^order` stripped.
///
/// A factorial of a negative argument in the denominator is a pole, so the
/// coefficient is zero when `order > degree`.
pub fn ladder_coefficient(order: usize, degree: usize) -> BigInt {
    if order > degree {
        return BigInt::zero();
    }
    // (degree+order)!/(degree-order)! as one product, then divide by order!
    let rising: BigInt = ((degree - order + 1)..=(degree + order))
        .map(BigInt::from)
        .product();
    rising / factorial(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(1), BigInt::from(1));
        assert_eq!(factorial(6), BigInt::from(720));
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
    }

    #[test]
    fn double_factorial_examples() {
        assert_eq!(double_factorial(5).unwrap(), BigInt::from(15));
        assert_eq!(double_factorial(-1).unwrap(), BigInt::from(1));
        assert_eq!(double_factorial(7).unwrap(), BigInt::from(105));
        assert_eq!(double_factorial(1).unwrap(), BigInt::from(1));
    }

    #[test]
    fn double_factorial_rejects_even_and_below_minus_one() {
        for bad in [0, 2, 8, -2, -3] {
            assert!(matches!(
                double_factorial(bad),
                Err(Error::DoubleFactorialDomain(v)) if v == bad
            ));
        }
    }

    #[test]
    fn ladder_coefficient_matches_factorial_ratio() {
        for degree in 0..15 {
            for order in 0..=degree {
                let direct = factorial(degree + order)
                    / (factorial(order) * factorial(degree - order));
                assert_eq!(ladder_coefficient(order, degree), direct);
            }
            assert!(ladder_coefficient(degree + 1, degree).is_zero());
        }
    }
}
