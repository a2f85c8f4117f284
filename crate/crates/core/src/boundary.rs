//! Endpoint values Pₙ⁽ᵏ⁾(1), computed three independent ways.
//!
//! * [`boundary_factorial`]: the closed form (n+k)!/(2ᵏ k! (n−k)!).
//! * [`boundary_recurrence`]: iteration of
//!   Pₙ⁽ᵏ⁾(1) = Pₙ₋₁⁽ᵏ⁾(1) + (n+k−1) Pₙ₋₁⁽ᵏ⁻¹⁾(1) over the triangle 0 ≤ k ≤ n,
//!   seeded with Pₙ(1) = 1 and Pₙ⁽ᵏ⁾(1) = 0 for k > n.
//! * [`boundary_genfunc`]: (2k−1)!! times the t^(n−k) Taylor coefficient of
//!   (1−t)^−(2k+1), which is what remains of the k-th x-derivative of the
//!   generating function (1−2xt+t²)^−½ at x = 1.
//!
//! All three return exactly zero for k > n.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::combinatorics::{double_factorial, factorial};
use crate::scalar::ExactScalar;

/// Degree `n` and derivative order `k`; `k > n` is allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BoundaryQuery {
    pub n: usize,
    pub k: usize,
}

impl BoundaryQuery {
    pub fn new(n: usize, k: usize) -> Self {
        BoundaryQuery { n, k }
    }
}

pub fn boundary_factorial(q: BoundaryQuery) -> ExactScalar {
    let BoundaryQuery { n, k } = q;
    if k > n {
        return ExactScalar::zero();
    }
    let numer = factorial(n + k);
    let denom = (BigInt::one() << k) * factorial(k) * factorial(n - k);
    ExactScalar::ratio(numer, denom)
}

pub fn boundary_recurrence(q: BoundaryQuery) -> ExactScalar {
    let BoundaryQuery { n, k } = q;
    if k > n {
        return ExactScalar::zero();
    }
    // row[c] holds P_r^{(c)}(1) for the current row r, c = 0..=k
    let mut row = vec![BigInt::zero(); k + 1];
    row[0] = BigInt::one();
    for r in 1..=n {
        let mut next = vec![BigInt::zero(); k + 1];
        next[0] = BigInt::one();
        for c in 1..=k.min(r) {
            next[c] = &row[c] + BigInt::from(r + c - 1) * &row[c - 1];
        }
        row = next;
    }
    ExactScalar::from_integer(row[k].clone())
}

/// Coefficients of t⁰..t^len−1 in (1−t)^−power, by repeated multiplication
/// with the geometric series 1/(1−t) (a running prefix sum).
pub fn pole_series(power: usize, len: usize) -> Vec<BigInt> {
    let mut coeffs = vec![BigInt::zero(); len];
    if let Some(c0) = coeffs.first_mut() {
        *c0 = BigInt::one();
    }
    for _ in 0..power {
        for i in 1..len {
            let prev = coeffs[i - 1].clone();
            coeffs[i] += prev;
        }
    }
    coeffs
}

pub fn boundary_genfunc(q: BoundaryQuery) -> ExactScalar {
    let BoundaryQuery { n, k } = q;
    if k > n {
        return ExactScalar::zero();
    }
    let lead = double_factorial(2 * k as i64 - 1).expect("2k-1 is odd or -1");
    let j = n - k;
    let taylor = pole_series(2 * k + 1, j + 1).pop().unwrap_or_default();
    ExactScalar::from_integer(lead * taylor)
}

/// Which boundary-value method to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryMethod {
    Factorial,
    Recurrence,
    Genfunc,
}

impl BoundaryMethod {
    pub const ALL: [BoundaryMethod; 3] = [
        BoundaryMethod::Factorial,
        BoundaryMethod::Recurrence,
        BoundaryMethod::Genfunc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BoundaryMethod::Factorial => "factorial",
            BoundaryMethod::Recurrence => "recurrence",
            BoundaryMethod::Genfunc => "genfunc",
        }
    }

    pub fn evaluate(self, q: BoundaryQuery) -> ExactScalar {
        match self {
            BoundaryMethod::Factorial => boundary_factorial(q),
            BoundaryMethod::Recurrence => boundary_recurrence(q),
            BoundaryMethod::Genfunc => boundary_genfunc(q),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bq(n: usize, k: usize) -> BoundaryQuery {
        BoundaryQuery::new(n, k)
    }

    fn int(v: i64) -> ExactScalar {
        ExactScalar::from(v)
    }

    #[test]
    fn factorial_examples() {
        assert_eq!(boundary_factorial(bq(5, 0)), int(1));
        assert_eq!(boundary_factorial(bq(3, 1)), int(6));
        assert_eq!(boundary_factorial(bq(2, 2)), int(3));
        assert_eq!(boundary_factorial(bq(2, 5)), int(0));
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(boundary_recurrence(bq(1, 1)), int(1));
        assert_eq!(boundary_recurrence(bq(3, 1)), int(6));
        assert_eq!(boundary_recurrence(bq(0, 0)), int(1));
        assert_eq!(boundary_recurrence(bq(0, 3)), int(0));
    }

    #[test]
    fn genfunc_examples() {
        assert_eq!(boundary_genfunc(bq(2, 1)), int(3));
        assert_eq!(boundary_genfunc(bq(3, 3)), int(15));
        assert_eq!(boundary_genfunc(bq(4, 0)), int(1));
        assert_eq!(boundary_genfunc(bq(1, 4)), int(0));
    }

    #[test]
    fn pole_series_is_binomial() {
        // (1-t)^-(2k+1) has t^j coefficient (2k+j)!/(j!(2k)!)
        for k in 0..6 {
            let series = pole_series(2 * k + 1, 10);
            for (j, c) in series.iter().enumerate() {
                let expected = factorial(2 * k + j) / (factorial(j) * factorial(2 * k));
                assert_eq!(c, &expected, "k={k} j={j}");
            }
        }
        assert!(pole_series(3, 0).is_empty());
    }

    #[test]
    fn low_order_closed_forms() {
        for n in 0..20i64 {
            let nu = n as usize;
            assert_eq!(boundary_factorial(bq(nu, 1)), ExactScalar::ratio(n * (n + 1), 2));
            if n >= 2 {
                assert_eq!(
                    boundary_factorial(bq(nu, 2)),
                    ExactScalar::ratio((n - 1) * n * (n + 1) * (n + 2), 8)
                );
            }
        }
    }
}
