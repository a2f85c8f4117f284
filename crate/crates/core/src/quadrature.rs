//! Gauss–Legendre quadrature as a floating-point cross-check of the exact
//! results.
//!
//! Nodes are the roots of P_N, found by Newton iteration from the usual
//! Chebyshev-like initial guesses; weights are 2/((1−x²)·P_N′(x)²).
//!
//! Nodes, weights and the integrand are carried in double-double arithmetic
//! ([`TwoFloat`], about 106 significant bits). Overlap integrands reach 10⁶ in
//! magnitude while many exact values are 0, and plain `f64` rounding of the
//! nodes alone leaves absolute errors around 1e−9 there. Results are rounded
//! to `f64` on the way out.

use std::f64::consts::PI;

use num_rational::BigRational;
use twofloat::TwoFloat;

use crate::error::{Error, Result};
use crate::legendre::legendre_derivative;
use crate::overlap::OverlapQuery;
use crate::polynomial::DensePolynomial;
use crate::scalar::ExactScalar;

pub const MAX_ORDER: usize = 128;
const MAX_NEWTON_STEPS: usize = 100;
const NEWTON_TOLERANCE: f64 = 1e-15;

#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    order: usize,
    nodes: Vec<TwoFloat>,
    weights: Vec<TwoFloat>,
}

impl QuadratureRule {
    pub fn order(&self) -> usize {
        self.order
    }

    /// Nodes rounded to `f64`, strictly increasing.
    pub fn nodes(&self) -> Vec<f64> {
        self.nodes.iter().map(TwoFloat::hi).collect()
    }

    /// Weights rounded to `f64`.
    pub fn weights(&self) -> Vec<f64> {
        self.weights.iter().map(TwoFloat::hi).collect()
    }

    /// Σ wᵢ f(xᵢ) in double-double, summing mirrored node pairs together so
    /// that odd integrands cancel exactly.
    pub fn integrate(&self, f: impl Fn(TwoFloat) -> TwoFloat) -> TwoFloat {
        let n = self.order;
        let mut total = TwoFloat::from(0.0);
        for i in 0..n / 2 {
            let j = n - 1 - i;
            total += self.weights[i] * (f(self.nodes[i]) + f(self.nodes[j]));
        }
        if n % 2 == 1 {
            total += self.weights[n / 2] * f(self.nodes[n / 2]);
        }
        total
    }
}

/// `a / b` to double-double accuracy. `TwoFloat`'s own quotient of two
/// double-doubles is only accurate to about `f64` precision, so one residual
/// correction is applied.
fn div(a: TwoFloat, b: TwoFloat) -> TwoFloat {
    let approx = a / b;
    let residual = a - approx * b;
    approx + residual / b.hi()
}

/// (P_N(x), P_N′(x)) by the three-term recurrence.
fn legendre_with_derivative(order: usize, x: TwoFloat) -> (TwoFloat, TwoFloat) {
    let mut previous = TwoFloat::from(1.0);
    let mut current = x;
    for j in 1..order {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0) * x * current - jf * previous) / (jf + 1.0);
        previous = current;
        current = next;
    }
    let derivative = div((order as f64) * (x * current - previous), x * x - 1.0);
    (current, derivative)
}

pub fn gauss_legendre_rule(order: usize) -> Result<QuadratureRule> {
    if !(1..=MAX_ORDER).contains(&order) {
        return Err(Error::QuadratureOrder(order));
    }
    let zero = TwoFloat::from(0.0);
    let mut nodes = vec![zero; order];
    let mut weights = vec![zero; order];
    let half = order.div_ceil(2);
    for i in 0..half {
        let root = if order % 2 == 1 && i == half - 1 {
            zero
        } else {
            newton_root(order, i)?
        };
        let (_, dp) = legendre_with_derivative(order, root);
        let w = div(TwoFloat::from(2.0), (1.0 - root * root) * dp * dp);
        nodes[order - 1 - i] = root;
        nodes[i] = -root;
        weights[order - 1 - i] = w;
        weights[i] = w;
    }
    Ok(QuadratureRule {
        order,
        nodes,
        weights,
    })
}

/// The `index`-th largest root of P_order.
fn newton_root(order: usize, index: usize) -> Result<TwoFloat> {
    let mut x = TwoFloat::from((PI * (index as f64 + 0.75) / (order as f64 + 0.5)).cos());
    for _ in 0..MAX_NEWTON_STEPS {
        let (p, dp) = legendre_with_derivative(order, x);
        let dx = div(p, dp);
        x -= dx;
        if dx.abs().hi() <= NEWTON_TOLERANCE {
            // quadratic convergence: one more step reaches double-double accuracy
            let (p, dp) = legendre_with_derivative(order, x);
            return Ok(x - div(p, dp));
        }
    }
    Err(Error::QuadratureNonConvergence {
        order,
        root: index,
        iterations: MAX_NEWTON_STEPS,
    })
}

fn to_two_float(value: &ExactScalar) -> TwoFloat {
    let hi = value.to_f64();
    let hi_exact = BigRational::from_float(hi).expect("finite coefficient");
    let lo = ExactScalar::from(value.as_rational() - hi_exact).to_f64();
    TwoFloat::new_add(hi, lo)
}

/// A polynomial with coefficients rounded once to double-double.
#[derive(Clone, Debug)]
pub struct FloatPolynomial {
    coeffs: Vec<TwoFloat>,
}

impl FloatPolynomial {
    pub fn from_exact(p: &DensePolynomial) -> Self {
        FloatPolynomial {
            coeffs: p.coeffs().iter().map(to_two_float).collect(),
        }
    }

    /// Horner's scheme.
    pub fn eval(&self, x: TwoFloat) -> TwoFloat {
        self.coeffs
            .iter()
            .rev()
            .fold(TwoFloat::from(0.0), |acc, &c| acc * x + c)
    }
}

/// Acceptance band for comparing a quadrature value against an exact one:
/// 1e−9 relative, or 1e−12 absolute when the exact value is 0.
pub fn within_tolerance(quadrature: f64, exact: f64) -> bool {
    let error = (quadrature - exact).abs();
    if exact == 0.0 {
        error <= 1e-12
    } else {
        error <= 1e-9 * exact.abs()
    }
}

/// Degree of Pₙ⁽q⁾·Pₘ⁽ᵏ⁾, zero when either factor is annihilated.
fn integrand_degree(query: OverlapQuery) -> usize {
    let OverlapQuery { n, m, q, k } = query;
    if q > n || k > m {
        0
    } else {
        (n - q) + (m - k)
    }
}

/// Σᵢ wᵢ·Pₙ⁽q⁾(xᵢ)·Pₘ⁽ᵏ⁾(xᵢ) with an `nodes`-point rule.
///
/// Requires 2·nodes − 1 ≥ (n−q) + (m−k) so that the rule is exact up to
/// rounding.
pub fn overlap_quadrature(query: OverlapQuery, nodes: usize) -> Result<f64> {
    let rule = gauss_legendre_rule(nodes)?;
    let degree = integrand_degree(query);
    let exact_to = 2 * nodes - 1;
    if degree > exact_to {
        return Err(Error::QuadratureUnderResolved {
            nodes,
            exact_to,
            degree,
        });
    }
    let left = FloatPolynomial::from_exact(&legendre_derivative(query.n, query.q));
    let right = FloatPolynomial::from_exact(&legendre_derivative(query.m, query.k));
    Ok(rule.integrate(|x| left.eval(x) * right.eval(x)).hi())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_node_rule() {
        let rule = gauss_legendre_rule(1).unwrap();
        assert_eq!(rule.nodes(), vec![0.0]);
        assert_eq!(rule.weights(), vec![2.0]);
    }

    #[test]
    fn two_node_rule() {
        let rule = gauss_legendre_rule(2).unwrap();
        let r = 1.0 / 3f64.sqrt();
        let xs = rule.nodes();
        assert!((xs[0] + r).abs() < 1e-15);
        assert!((xs[1] - r).abs() < 1e-15);
        for w in rule.weights() {
            assert!((w - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn weights_sum_to_two() {
        for order in [5, 17, 64, 128] {
            let rule = gauss_legendre_rule(order).unwrap();
            let sum = rule.integrate(|_| TwoFloat::from(1.0)).hi();
            assert!((sum - 2.0).abs() < 1e-12, "order {order}: {sum}");
            let plain: f64 = rule.weights().iter().sum();
            assert!((plain - 2.0).abs() < 1e-12, "order {order}: {plain}");
        }
    }

    #[test]
    fn nodes_increasing_and_symmetric() {
        for order in 1..=40 {
            let rule = gauss_legendre_rule(order).unwrap();
            let xs = rule.nodes();
            assert!(xs.windows(2).all(|w| w[0] < w[1]));
            assert!(xs.iter().all(|&x| x > -1.0 && x < 1.0));
            for i in 0..order {
                assert!((xs[i] + xs[order - 1 - i]).abs() <= 1e-14);
            }
            assert!(rule.weights().iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn order_out_of_range() {
        assert!(matches!(gauss_legendre_rule(0), Err(Error::QuadratureOrder(0))));
        assert!(matches!(gauss_legendre_rule(129), Err(Error::QuadratureOrder(129))));
    }

    #[test]
    fn corrected_division() {
        let q = div(TwoFloat::from(1.0), TwoFloat::from(3.0));
        assert!((q * 3.0 - 1.0).abs().hi() < 1e-30);
    }

    #[test]
    fn exact_coefficient_split() {
        let third = ExactScalar::ratio(1, 3);
        let dd = to_two_float(&third);
        assert_eq!(dd.hi(), 1.0 / 3.0);
        assert!(dd.lo() != 0.0);
        assert!(((dd * 3.0) - 1.0).abs().hi() < 1e-30);
    }

    #[test]
    fn quadrature_examples() {
        let v = overlap_quadrature(OverlapQuery::new(0, 1, 0, 1), 2).unwrap();
        assert!((v - 2.0).abs() < 1e-12);
        let v = overlap_quadrature(OverlapQuery::new(1, 2, 0, 0), 3).unwrap();
        assert!(v.abs() < 1e-12);
        let v = overlap_quadrature(OverlapQuery::new(2, 4, 1, 1), 4).unwrap();
        assert!((v - 6.0).abs() <= 1e-9 * 6.0);
    }

    #[test]
    fn under_resolved_rule_is_rejected() {
        let err = overlap_quadrature(OverlapQuery::new(5, 5, 0, 0), 5).unwrap_err();
        assert!(matches!(
            err,
            Error::QuadratureUnderResolved { nodes: 5, exact_to: 9, degree: 10 }
        ));
    }
}
