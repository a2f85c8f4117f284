//! Brute-force ground truth for the closed forms.
//!
//! Everything here is literal polynomial algebra: expand, differentiate,
//! multiply, integrate term by term. Nothing in this module may depend on
//! [`crate::overlap`] or [`crate::boundary`].

use crate::legendre::{legendre_coeffs, legendre_derivative};
use crate::overlap::OverlapQuery;
use crate::polynomial::DensePolynomial;
use crate::scalar::ExactScalar;

/// ∫₋₁¹ p(x) dx, using ∫ xᵖ = 2/(p+1) for even p and 0 for odd p.
pub fn integrate_over_interval(p: &DensePolynomial) -> ExactScalar {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(power, c)| power % 2 == 0 && !c.is_zero())
        .map(|(power, c)| c * &ExactScalar::ratio(2, power as i64 + 1))
        .sum()
}

/// ∫ Pₙ⁽q⁾ Pₘ⁽ᵏ⁾ computed from the polynomials themselves.
pub fn overlap_oracle(query: OverlapQuery) -> ExactScalar {
    let left = legendre_derivative(query.n, query.q);
    let right = legendre_derivative(query.m, query.k);
    integrate_over_interval(&(&left * &right))
}

/// Coefficients `a_j` with `p = Σ a_j P_j`, where a_j = (2j+1)/2 · ∫ p P_j.
/// Length is `degree(p) + 1`, empty for the zero polynomial.
pub fn legendre_project(p: &DensePolynomial) -> Vec<ExactScalar> {
    let Some(degree) = p.degree() else {
        return Vec::new();
    };
    (0..=degree)
        .map(|j| {
            let inner = integrate_over_interval(&(p * &legendre_coeffs(j)));
            inner * ExactScalar::ratio(2 * j as i64 + 1, 2)
        })
        .collect()
}

/// Σ a_j P_j as a monomial-basis polynomial.
pub fn legendre_reconstruct(coefficients: &[ExactScalar]) -> DensePolynomial {
    coefficients
        .iter()
        .enumerate()
        .fold(DensePolynomial::zero(), |acc, (j, a)| {
            &acc + &legendre_coeffs(j).scale(a)
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> ExactScalar {
        ExactScalar::from(v)
    }

    #[test]
    fn integrate_monomials() {
        assert_eq!(integrate_over_interval(&DensePolynomial::from_integers(&[1])), int(2));
        assert_eq!(integrate_over_interval(&DensePolynomial::from_integers(&[0, 1])), int(0));
        assert_eq!(
            integrate_over_interval(&DensePolynomial::from_integers(&[0, 0, 1])),
            ExactScalar::ratio(2, 3)
        );
        assert_eq!(integrate_over_interval(&DensePolynomial::zero()), int(0));
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(overlap_oracle(OverlapQuery::new(0, 1, 0, 1)), int(2));
        assert_eq!(overlap_oracle(OverlapQuery::new(0, 2, 0, 2)), int(6));
        assert_eq!(
            overlap_oracle(OverlapQuery::new(10, 3, 10, 3)),
            int(19_641_872_250)
        );
        // P1' = 1, P2' = 3x: odd integrand
        assert_eq!(overlap_oracle(OverlapQuery::new(1, 2, 1, 1)), int(0));
        assert_eq!(overlap_oracle(OverlapQuery::new(2, 2, 1, 1)), int(6));
    }

    #[test]
    fn project_examples() {
        let mut unit = vec![ExactScalar::zero(); 5];
        unit.push(ExactScalar::one());
        assert_eq!(legendre_project(&legendre_coeffs(5)), unit);

        let dp2 = legendre_coeffs(2).differentiate(1);
        assert_eq!(legendre_project(&dp2), vec![int(0), int(3)]);

        assert!(legendre_project(&DensePolynomial::zero()).is_empty());
    }
}
