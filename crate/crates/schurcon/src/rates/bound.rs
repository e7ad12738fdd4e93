//! Empirical check of the dimension-entropy approximation: for every diagram,
//! `|(1/n) ln dim V - H(lambda/n)|` must stay under
//! `(coeff / n) ln(n + d) + C / n`.
//!
//! The stated coefficient `(2d^2 + d)/2` and the derivation's `(3d^2 - 2d)/2`
//! disagree for d >= 4; the check uses the weaker envelope (their maximum)
//! and reports both.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rates::stirling::stirling_delta_sup;
use crate::young::dims::ln_dim_sn_irrep;
use crate::young::{enumerate_partitions, Partition};

#[derive(Clone, Debug, Serialize)]
pub struct BoundViolation {
    pub n: usize,
    pub partition: Partition,
    pub lhs: f64,
    pub bound: f64,
}

/// Report of the bound check over all diagrams up to `n_max`.
#[derive(Clone, Debug, Serialize)]
pub struct DimEntropyBoundReport {
    pub d: usize,
    pub n_max: usize,
    /// `(2d^2 + d)/2`, the coefficient as stated.
    pub coeff_stated: f64,
    /// `(3d^2 - 2d)/2`, the coefficient the derivation supports.
    pub coeff_derived: f64,
    /// The max of the two, used in the check.
    pub coeff_used: f64,
    /// `C = d * sup_n delta_n`.
    pub constant: f64,
    /// Minimum of `bound - lhs` over all diagrams; positive means the bound
    /// holds with room.
    pub worst_slack: f64,
    pub worst_case: Option<BoundViolation>,
    /// Per-`n` maximum of the left side, for observing the decay.
    pub max_gap_by_n: Vec<(usize, f64)>,
    pub holds: bool,
}

pub fn dim_entropy_bound_check(n_max: usize, d: usize) -> Result<DimEntropyBoundReport> {
    if d == 0 || d > 4 {
        return Err(Error::guard(format!("bound check supports 1 <= d <= 4, got {d}")));
    }
    let cap = if d <= 3 { 60 } else { 40 };
    if n_max == 0 || n_max > cap {
        return Err(Error::guard(format!(
            "bound check supports 1 <= n_max <= {cap} for d = {d}, got {n_max}"
        )));
    }

    let coeff_stated = (2 * d * d + d) as f64 / 2.0;
    let coeff_derived = (3 * d * d) as f64 / 2.0 - d as f64;
    let coeff_used = coeff_stated.max(coeff_derived);
    let constant = d as f64 * stirling_delta_sup();

    let mut worst_slack = f64::INFINITY;
    let mut worst_case = None;
    let mut max_gap_by_n = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let nf = n as f64;
        let bound = coeff_used / nf * (nf + d as f64).ln() + constant / nf;
        let mut max_gap = 0.0f64;
        for lambda in enumerate_partitions(n, d)? {
            let type_entropy_nats = -lambda
                .parts()
                .iter()
                .filter(|&&p| p > 0)
                .map(|&p| {
                    let q = p as f64 / nf;
                    q * q.ln()
                })
                .sum::<f64>();
            let lhs = (ln_dim_sn_irrep(&lambda, d)? / nf - type_entropy_nats).abs();
            max_gap = max_gap.max(lhs);
            let slack = bound - lhs;
            if slack < worst_slack {
                worst_slack = slack;
                worst_case = Some(BoundViolation {
                    n,
                    partition: lambda.clone(),
                    lhs,
                    bound,
                });
            }
        }
        max_gap_by_n.push((n, max_gap));
    }

    Ok(DimEntropyBoundReport {
        d,
        n_max,
        coeff_stated,
        coeff_derived,
        coeff_used,
        constant,
        worst_slack,
        worst_case,
        max_gap_by_n,
        holds: worst_slack > 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn holds_for_two_levels() {
        let report = dim_entropy_bound_check(40, 2).unwrap();
        assert!(report.holds);
        assert!(report.worst_slack > 0.0);
        assert_eq!(report.coeff_used, 5.0);
        assert!((report.constant - 2.0).abs() < 1e-12);
    }

    #[test]
    fn one_row_contributes_zero_lhs() {
        // dim V = 1 and the type entropy vanishes for a single row, so the
        // per-n max gap is attained elsewhere; just confirm the report runs
        // and dimensions behave.
        let report = dim_entropy_bound_check(10, 2).unwrap();
        assert_eq!(report.max_gap_by_n.len(), 10);
        assert_eq!(report.max_gap_by_n[0].0, 1);
        assert!(report.max_gap_by_n[0].1 < 1e-12);
    }

    #[test]
    fn derived_coefficient_takes_over_at_four_levels() {
        let report = dim_entropy_bound_check(10, 4).unwrap();
        assert_eq!(report.coeff_stated, 18.0);
        assert_eq!(report.coeff_derived, 20.0);
        assert_eq!(report.coeff_used, 20.0);
        assert!(report.holds);
    }

    #[test]
    fn gap_decays_roughly_like_log_over_n() {
        let report = dim_entropy_bound_check(60, 2).unwrap();
        let gap_at = |n: usize| {
            report
                .max_gap_by_n
                .iter()
                .find(|&&(m, _)| m == n)
                .unwrap()
                .1
        };
        assert!(gap_at(60) < gap_at(10));
        // Ratio tracks (log n / n) within a factor of two.
        let model = |n: f64| n.ln() / n;
        let ratio = gap_at(60) / gap_at(10);
        let model_ratio = model(60.0) / model(10.0);
        assert!(ratio < 2.0 * model_ratio && ratio > model_ratio / 2.0, "{ratio} vs {model_ratio}");
    }

    #[test]
    fn guards() {
        assert!(dim_entropy_bound_check(61, 2).is_err());
        assert!(dim_entropy_bound_check(41, 4).is_err());
        assert!(dim_entropy_bound_check(10, 5).is_err());
        assert!(dim_entropy_bound_check(0, 2).is_err());
    }
}
