//! Exact Legendre polynomials and their derivatives.
//!
//! Pₙ is built from the three-term (Bonnet) recurrence
//!
//! ```text
//! (j+1) P_{j+1}(x) = (2j+1) x P_j(x) - j P_{j-1}(x),   P_0 = 1, P_1 = x
//! ```
//!
//! Rows are memoized in a process-wide table guarded by an `RwLock`; the table
//! only ever grows and its contents are identical to what
//! [`legendre_coeffs_uncached`] returns.

use std::sync::{OnceLock, RwLock};

use crate::polynomial::DensePolynomial;
use crate::scalar::ExactScalar;

static TABLE: OnceLock<RwLock<Vec<DensePolynomial>>> = OnceLock::new();

fn table() -> &'static RwLock<Vec<DensePolynomial>> {
    TABLE.get_or_init(|| {
        RwLock::new(vec![DensePolynomial::from_integers(&[1]), DensePolynomial::x()])
    })
}

fn bonnet_step(j: usize, current: &DensePolynomial, previous: &DensePolynomial) -> DensePolynomial {
    let a = ExactScalar::ratio(2 * j as i64 + 1, j as i64 + 1);
    let b = ExactScalar::ratio(j as i64, j as i64 + 1);
    &current.shift_up().scale(&a) - &previous.scale(&b)
}

/// Exact monomial coefficients of Pₙ.
pub fn legendre_coeffs(n: usize) -> DensePolynomial {
    {
        let rows = table().read().unwrap_or_else(|e| e.into_inner());
        if let Some(p) = rows.get(n) {
            return p.clone();
        }
    }
    let mut rows = table().write().unwrap_or_else(|e| e.into_inner());
    while rows.len() <= n {
        let j = rows.len() - 1;
        let next = bonnet_step(j, &rows[j], &rows[j - 1]);
        rows.push(next);
    }
    rows[n].clone()
}

/// Same as [`legendre_coeffs`] without touching the shared table.
pub fn legendre_coeffs_uncached(n: usize) -> DensePolynomial {
    let mut previous = DensePolynomial::from_integers(&[1]);
    if n == 0 {
        return previous;
    }
    let mut current = DensePolynomial::x();
    for j in 1..n {
        let next = bonnet_step(j, &current, &previous);
        previous = std::mem::replace(&mut current, next);
    }
    current
}

/// Pₙ⁽ᵏ⁾ as an exact polynomial.
pub fn legendre_derivative(n: usize, k: usize) -> DensePolynomial {
    legendre_coeffs(n).differentiate(k)
}

/// Sign in Pₙ⁽ᵏ⁾(−x) = (−1)^{n+k} Pₙ⁽ᵏ⁾(x).
pub fn parity_sign(n: usize, k: usize) -> i32 {
    if (n + k).is_multiple_of(2) {
        1
    } else {
        -1
    }
}
