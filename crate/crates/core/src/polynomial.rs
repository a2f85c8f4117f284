//! Dense univariate polynomials with exact rational coefficients.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::scalar::ExactScalar;

/// Coefficients over the monomial basis: `coeffs[p]` multiplies `x^p`.
///
/// Trailing zeros are trimmed on construction, so the zero polynomial is the
/// empty coefficient vector and [`degree`](Self::degree) is unambiguous.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct DensePolynomial {
    coeffs: Vec<ExactScalar>,
}

impl DensePolynomial {
    pub fn zero() -> Self {
        DensePolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: ExactScalar) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![ExactScalar::zero(), ExactScalar::one()])
    }

    pub fn new(mut coeffs: Vec<ExactScalar>) -> Self {
        while coeffs.last().is_some_and(ExactScalar::is_zero) {
            coeffs.pop();
        }
        DensePolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| ExactScalar::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[ExactScalar] {
        &self.coeffs
    }

    /// Coefficient of `x^power`, zero beyond the degree.
    pub fn coeff(&self, power: usize) -> ExactScalar {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Exact `k`-fold derivative. Zero once `k` exceeds the degree.
    pub fn differentiate(&self, k: usize) -> DensePolynomial {
        if k >= self.coeffs.len() {
            return DensePolynomial::zero();
        }
        let coeffs = self.coeffs[k..]
            .iter()
            .enumerate()
            .map(|(i, c)| {
                // d^k/dx^k x^(i+k) = (i+1)(i+2)...(i+k) x^i
                let falling: BigInt = ((i + 1)..=(i + k)).map(BigInt::from).product();
                c * &ExactScalar::from(falling)
            })
            .collect();
        DensePolynomial::new(coeffs)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &ExactScalar) -> ExactScalar {
        self.coeffs
            .iter()
            .rev()
            .fold(ExactScalar::zero(), |acc, c| &(acc * x) + c)
    }

    pub fn scale(&self, factor: &ExactScalar) -> DensePolynomial {
        DensePolynomial::new(self.coeffs.iter().map(|c| c * factor).collect())
    }

    /// Multiply by `x`.
    pub fn shift_up(&self) -> DensePolynomial {
        if self.is_zero() {
            return DensePolynomial::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ExactScalar::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        DensePolynomial { coeffs }
    }

    /// `p(-x)`.
    pub fn reflect(&self) -> DensePolynomial {
        DensePolynomial::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(p, c)| if p % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Coefficients rounded to nearest `f64`, lowest power first.
    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(ExactScalar::to_f64).collect()
    }
}

fn combine(
    a: &DensePolynomial,
    b: &DensePolynomial,
    op: impl Fn(&ExactScalar, &ExactScalar) -> ExactScalar,
) -> DensePolynomial {
    let len = a.coeffs.len().max(b.coeffs.len());
    DensePolynomial::new((0..len).map(|p| op(&a.coeff(p), &b.coeff(p))).collect())
}

impl Add for &DensePolynomial {
    type Output = DensePolynomial;
    fn add(self, rhs: &DensePolynomial) -> DensePolynomial {
        combine(self, rhs, |x, y| x + y)
    }
}

impl Sub for &DensePolynomial {
    type Output = DensePolynomial;
    fn sub(self, rhs: &DensePolynomial) -> DensePolynomial {
        combine(self, rhs, |x, y| x - y)
    }
}

impl Neg for &DensePolynomial {
    type Output = DensePolynomial;
    fn neg(self) -> DensePolynomial {
        DensePolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// Naive O(d²) convolution.
impl Mul for &DensePolynomial {
    type Output = DensePolynomial;
    fn mul(self, rhs: &DensePolynomial) -> DensePolynomial {
        if self.is_zero() || rhs.is_zero() {
            return DensePolynomial::zero();
        }
        let mut out = vec![ExactScalar::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        DensePolynomial::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> ExactScalar {
        ExactScalar::ratio(n, d)
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = DensePolynomial::from_integers(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(DensePolynomial::from_integers(&[0, 0]).degree(), None);
        assert!(DensePolynomial::from_integers(&[0]).is_zero());
    }

    #[test]
    fn differentiate_examples() {
        let x = DensePolynomial::from_integers(&[0, 1]);
        assert_eq!(x.differentiate(1), DensePolynomial::from_integers(&[1]));

        let p2 = DensePolynomial::new(vec![q(-1, 2), q(0, 1), q(3, 2)]);
        assert_eq!(p2.differentiate(2), DensePolynomial::from_integers(&[3]));
        assert_eq!(p2.differentiate(0), p2);

        let one = DensePolynomial::from_integers(&[1]);
        assert!(one.differentiate(1).is_zero());
        assert!(one.differentiate(7).is_zero());
    }

    #[test]
    fn eval_zero_polynomial() {
        assert_eq!(DensePolynomial::zero().eval(&ExactScalar::from(5)), ExactScalar::zero());
    }

    #[test]
    fn eval_horner() {
        // 1 + 2x + 3x^2 at x = 1/2 -> 1 + 1 + 3/4
        let p = DensePolynomial::from_integers(&[1, 2, 3]);
        assert_eq!(p.eval(&q(1, 2)), q(11, 4));
    }

    #[test]
    fn product_and_sum() {
        let a = DensePolynomial::from_integers(&[1, 1]);
        let b = DensePolynomial::from_integers(&[-1, 1]);
        assert_eq!(&a * &b, DensePolynomial::from_integers(&[-1, 0, 1]));
        assert!((&a - &a).is_zero());
        assert_eq!(&a + &b, DensePolynomial::from_integers(&[0, 2]));
        assert!((&a * &DensePolynomial::zero()).is_zero());
        assert_eq!(a.shift_up(), DensePolynomial::from_integers(&[0, 1, 1]));
        assert_eq!(a.reflect(), DensePolynomial::from_integers(&[1, -1]));
    }
}
