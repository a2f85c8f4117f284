//! Closed-form overlap integrals ∫₋₁¹ Pₙ⁽q⁾(x) Pₘ⁽ᵏ⁾(x) dx.
//!
//! Every formula here comes from repeated integration by parts: derivatives are
//! moved from one factor to the other, each step leaving an endpoint term
//! Pₙ⁽ᵃ⁾(±1)·Pₘ⁽ᵇ⁾(±1). The endpoint values at −1 follow from those at +1 by
//! parity, which collapses each pair into a single term times the parity
//! filter 1 − (−1)^s. What remains after the last step is an integral of an
//! undifferentiated Pₙ against a derivative of Pₘ of lower degree, which
//! vanishes by orthogonality unless the θ-constraint holds.
//!
//! Sum terms that would contain the factorial of a negative integer in a
//! denominator are taken to be zero (see [`ladder_coefficient`]).
//!
//! The q = k = 0 case is plain orthogonality, 2/(2n+1)·δₙₘ; the
//! integration-by-parts formulas require at least one derivative.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::combinatorics::ladder_coefficient;
use crate::scalar::ExactScalar;

/// Indices of ∫ Pₙ⁽q⁾ Pₘ⁽ᵏ⁾.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct OverlapQuery {
    pub n: usize,
    pub m: usize,
    pub q: usize,
    pub k: usize,
}

impl OverlapQuery {
    pub fn new(n: usize, m: usize, q: usize, k: usize) -> Self {
        OverlapQuery { n, m, q, k }
    }

    /// The same integral with the two factors swapped.
    pub fn swapped(self) -> Self {
        OverlapQuery::new(self.m, self.n, self.k, self.q)
    }
}

/// Why a result is zero. Priority when several apply:
/// annihilation, then parity, then degree constraint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VanishingReason {
    None,
    Parity,
    DegreeConstraint,
    DerivativeAnnihilation,
}

impl VanishingReason {
    pub fn as_str(self) -> &'static str {
        match self {
            VanishingReason::None => "none",
            VanishingReason::Parity => "parity",
            VanishingReason::DegreeConstraint => "degree_constraint",
            VanishingReason::DerivativeAnnihilation => "derivative_annihilation",
        }
    }

    /// Reason for a query whose value is already known.
    pub fn classify(query: OverlapQuery, value: &ExactScalar) -> Self {
        let OverlapQuery { n, m, q, k } = query;
        if q > n || k > m {
            VanishingReason::DerivativeAnnihilation
        } else if (n + m + q + k) % 2 == 1 {
            VanishingReason::Parity
        } else if value.is_zero() {
            VanishingReason::DegreeConstraint
        } else {
            VanishingReason::None
        }
    }
}

impl fmt::Display for VanishingReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlapResult {
    pub value: ExactScalar,
    pub vanishing_reason: VanishingReason,
}

impl OverlapResult {
    pub fn new(query: OverlapQuery, value: ExactScalar) -> Self {
        let vanishing_reason = VanishingReason::classify(query, &value);
        debug_assert!(vanishing_reason == VanishingReason::None || value.is_zero());
        OverlapResult {
            value,
            vanishing_reason,
        }
    }
}

/// Right-continuous step: 1 for x > 0, 0 for x ≤ 0.
pub fn theta(x: i64) -> i64 {
    i64::from(x > 0)
}

/// 1 − (−1)^s.
pub fn parity_filter(s: i64) -> i64 {
    if s.rem_euclid(2) == 1 {
        2
    } else {
        0
    }
}

fn idx(v: usize) -> i64 {
    v as i64
}

fn half_triangular(v: usize) -> ExactScalar {
    ExactScalar::ratio(idx(v) * (idx(v) + 1), 2)
}

/// `filter / 2^power` with a possibly negative power.
fn filtered_prefactor(filter: i64, power: i64) -> ExactScalar {
    let two_pow = |p: i64| ExactScalar::from_integer(BigInt::one() << p as usize);
    let filter = ExactScalar::from(filter);
    if power >= 0 {
        filter / two_pow(power)
    } else {
        filter * two_pow(-power)
    }
}

fn alternating(j: usize, term: BigInt) -> BigInt {
    if (j - 1).is_multiple_of(2) {
        term
    } else {
        -term
    }
}

fn orthogonality(n: usize, m: usize) -> ExactScalar {
    if n == m {
        ExactScalar::ratio(2, 2 * idx(n) + 1)
    } else {
        ExactScalar::zero()
    }
}

/// ∫ Pₙ Pₘ′ = θ(m−n)·[1−(−1)^{m+n}].
pub fn overlap_p_dp(n: usize, m: usize) -> OverlapResult {
    let value = theta(idx(m) - idx(n)) * parity_filter(idx(m + n));
    OverlapResult::new(OverlapQuery::new(n, m, 0, 1), ExactScalar::from(value))
}

/// ∫ Pₙ Pₘ″ = θ([m−1]−n)·[1−(−1)^{n+m+1}]·(m(m+1)/2 − n(n+1)/2).
pub fn overlap_p_ddp(n: usize, m: usize) -> OverlapResult {
    let gate = theta(idx(m) - 1 - idx(n)) * parity_filter(idx(n + m + 1));
    let value = ExactScalar::from(gate) * (half_triangular(m) - half_triangular(n));
    OverlapResult::new(OverlapQuery::new(n, m, 0, 2), value)
}

/// ∫ Pₙ′ Pₘ′ = [1−(−1)^{n+m+1}]·{m(m+1)/2·[1−θ([m−1]−n)] + n(n+1)/2·θ([m−1]−n)}.
pub fn overlap_dp_dp(n: usize, m: usize) -> OverlapResult {
    let step = theta(idx(m) - 1 - idx(n));
    let braces = half_triangular(m) * ExactScalar::from(1 - step)
        + half_triangular(n) * ExactScalar::from(step);
    let value = ExactScalar::from(parity_filter(idx(n + m + 1))) * braces;
    OverlapResult::new(OverlapQuery::new(n, m, 1, 1), value)
}

/// ∫ Pₙ Pₘ⁽ᵏ⁾ for general k.
///
/// For k ≥ 1 this is
/// θ({m−(k−1)}−n)·[1−(−1)^{n+m+k−1}]·2^{−(k−1)}·Σⱼ₌₁ᵏ (−1)^{j−1} L(j−1, n)·L(k−j, m)
/// with L the [`ladder_coefficient`]. For k = 0 it is plain orthogonality.
pub fn overlap_p_dk(n: usize, m: usize, k: usize) -> OverlapResult {
    let query = OverlapQuery::new(n, m, 0, k);
    if k == 0 {
        return OverlapResult::new(query, orthogonality(n, m));
    }
    let step = theta(idx(m) - (idx(k) - 1) - idx(n));
    if step == 0 {
        return OverlapResult::new(query, ExactScalar::zero());
    }
    let sum: BigInt = (1..=k)
        .map(|j| alternating(j, ladder_coefficient(j - 1, n) * ladder_coefficient(k - j, m)))
        .sum();
    let prefactor = filtered_prefactor(parity_filter(idx(n + m + k) - 1), idx(k) - 1);
    OverlapResult::new(query, prefactor * ExactScalar::from_integer(sum))
}

/// Σⱼ₌₁^q (−1)^{j−1} L(q−j, n)·L(k+j−1, m): the integer part of the
/// endpoint terms produced by moving all q derivatives off Pₙ.
fn first_ladder(query: OverlapQuery) -> BigInt {
    let OverlapQuery { n, m, q, k } = query;
    (1..=q)
        .map(|j| alternating(j, ladder_coefficient(q - j, n) * ladder_coefficient(k + j - 1, m)))
        .sum()
}

/// Σⱼ₌₁^{k+q} (−1)^{j−1} L(j−1, n)·L(k+q−j, m): the endpoint terms of the
/// remaining ∫ Pₙ Pₘ⁽ᵏ⁺q⁾.
fn second_ladder(query: OverlapQuery) -> BigInt {
    let OverlapQuery { n, m, q, k } = query;
    let total = k + q;
    (1..=total)
        .map(|j| alternating(j, ladder_coefficient(j - 1, n) * ladder_coefficient(total - j, m)))
        .sum()
}

fn general_prefactor(query: OverlapQuery) -> ExactScalar {
    let OverlapQuery { n, m, q, k } = query;
    filtered_prefactor(parity_filter(idx(n + m + k + q) - 1), idx(k + q) - 1)
}

/// Evaluated endpoint terms from integrating by parts q times, including the
/// shared prefactor [1−(−1)^{n+m+k+q−1}]/2^{k+q−1}. Zero when q = 0 (empty
/// ladder).
pub fn boundary_term_sum(query: OverlapQuery) -> ExactScalar {
    if query.q == 0 {
        return ExactScalar::zero();
    }
    general_prefactor(query) * ExactScalar::from_integer(first_ladder(query))
}

/// ∫ Pₙ⁽q⁾ Pₘ⁽ᵏ⁾ for any indices.
///
/// With q + k ≥ 1:
///
/// ```text
/// [1 − (−1)^{n+m+k+q−1}] / 2^{k+q−1} · { first_ladder
///     + (−1)^q · θ({m − (k+q−1)} − n) · second_ladder }
/// ```
///
/// With q = k = 0 the integration-by-parts form does not apply and the result
/// is 2/(2n+1)·δₙₘ.
pub fn overlap_general(query: OverlapQuery) -> OverlapResult {
    let OverlapQuery { n, m, q, k } = query;
    if q == 0 && k == 0 {
        return OverlapResult::new(query, orthogonality(n, m));
    }
    let mut braces = first_ladder(query);
    if theta(idx(m) - idx(k + q - 1) - idx(n)) == 1 {
        let tail = second_ladder(query);
        if q % 2 == 0 {
            braces += tail;
        } else {
            braces -= tail;
        }
    }
    let value = general_prefactor(query) * ExactScalar::from_integer(braces);
    OverlapResult::new(query, value)
}
