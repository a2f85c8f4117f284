//! Exact overlap integrals of differentiated Legendre polynomials.
//!
//! The main entry point is [`overlap_general`], which evaluates
//! ∫₋₁¹ Pₙ⁽q⁾(x) Pₘ⁽ᵏ⁾(x) dx in closed form as an exact rational. The
//! [`oracle`] module computes the same integrals by brute-force polynomial
//! algebra, and [`quadrature`] gives an independent floating-point check.

pub mod boundary;
pub mod cli;
pub mod combinatorics;
pub mod error;
pub mod gram;
pub mod legendre;
pub mod oracle;
pub mod overlap;
pub mod polynomial;
pub mod quadrature;
pub mod scalar;
pub mod sweep;

pub use boundary::{
    boundary_factorial, boundary_genfunc, boundary_recurrence, BoundaryMethod, BoundaryQuery,
};
pub use combinatorics::double_factorial;
pub use error::{Error, Result};
pub use gram::{GramMatrix, GramMethod};
pub use legendre::{legendre_coeffs, legendre_derivative, parity_sign};
pub use oracle::{integrate_over_interval, legendre_project, overlap_oracle};
pub use overlap::{
    boundary_term_sum, overlap_dp_dp, overlap_general, overlap_p_ddp, overlap_p_dk, overlap_p_dp,
    parity_filter, theta, OverlapQuery, OverlapResult, VanishingReason,
};
pub use polynomial::DensePolynomial;
pub use quadrature::{gauss_legendre_rule, overlap_quadrature, QuadratureRule};
pub use scalar::ExactScalar;
pub use sweep::{verify_sweep, Mismatch, SweepReport};
