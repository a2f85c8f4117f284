//! Exhaustive closed-form vs. oracle comparison over an index box.

use rayon::prelude::*;

use crate::oracle::overlap_oracle;
use crate::overlap::{overlap_general, OverlapQuery};
use crate::scalar::ExactScalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub query: OverlapQuery,
    pub closed_form: ExactScalar,
    pub oracle: ExactScalar,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub comparisons: usize,
    pub mismatches: Vec<Mismatch>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// All (n, m, q, k) with n, m ≤ n_max, q ≤ q_max, k ≤ k_max, in
/// lexicographic order.
pub fn sweep_queries(n_max: usize, q_max: usize, k_max: usize) -> Vec<OverlapQuery> {
    let mut out = Vec::with_capacity((n_max + 1).pow(2) * (q_max + 1) * (k_max + 1));
    for n in 0..=n_max {
        for m in 0..=n_max {
            for q in 0..=q_max {
                for k in 0..=k_max {
                    out.push(OverlapQuery::new(n, m, q, k));
                }
            }
        }
    }
    out
}

/// Compares [`overlap_general`] with [`overlap_oracle`] on every tuple of
/// [`sweep_queries`]. Mismatches come back in sweep order.
pub fn verify_sweep(n_max: usize, q_max: usize, k_max: usize) -> SweepReport {
    let queries = sweep_queries(n_max, q_max, k_max);
    let mismatches = queries
        .par_iter()
        .filter_map(|&query| {
            let closed_form = overlap_general(query).value;
            let oracle = overlap_oracle(query);
            (closed_form != oracle).then_some(Mismatch {
                query,
                closed_form,
                oracle,
            })
        })
        .collect();
    SweepReport {
        comparisons: queries.len(),
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_sizes() {
        assert_eq!(sweep_queries(6, 2, 2).len(), 441);
        assert_eq!(sweep_queries(0, 0, 0), vec![OverlapQuery::new(0, 0, 0, 0)]);
    }

    #[test]
    fn small_sweep_is_clean() {
        let report = verify_sweep(6, 2, 2);
        assert_eq!(report.comparisons, 441);
        assert!(report.passed(), "{:?}", report.mismatches);
    }
}
