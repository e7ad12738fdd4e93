use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerance on |sum - 1| accepted by the strict constructor.
pub const SPECTRUM_SUM_TOL: f64 = 1e-12;

/// An ordered probability vector: the eigenvalues of a reduced state, sorted
/// descending, summing to one.
///
/// Construction canonicalizes the order, so callers may pass eigenvalues in
/// any order; everything downstream assumes `p[0] >= p[1] >= ... >= 0`.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    probs: Vec<f64>,
}

impl Spectrum {
    /// Strict constructor: entries nonnegative and finite, sum within
    /// [`SPECTRUM_SUM_TOL`] of one. Sorts descending.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        Self::with_sum_tol(probs, SPECTRUM_SUM_TOL)
    }

    /// Constructor with a caller-chosen sum tolerance. Entries passing the
    /// check are rescaled so the stored vector sums to one at machine
    /// precision.
    pub fn with_sum_tol(mut probs: Vec<f64>, tol: f64) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::input("spectrum must have at least one entry"));
        }
        if probs.iter().any(|p| !p.is_finite() || *p < 0.0) {
            return Err(Error::input(format!(
                "spectrum entries must be finite and nonnegative, got {probs:?}"
            )));
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > tol {
            return Err(Error::input(format!(
                "spectrum sums to {sum}, outside tolerance {tol} of 1"
            )));
        }
        for p in &mut probs {
            *p /= sum;
        }
        probs.sort_by(|a, b| b.total_cmp(a));
        Ok(Spectrum { probs })
    }

    /// Rescales an arbitrary nonnegative vector to sum one, then sorts.
    pub fn normalized(probs: Vec<f64>) -> Result<Self> {
        let sum: f64 = probs.iter().sum();
        if !sum.is_finite() || sum <= 0.0 {
            return Err(Error::input(format!(
                "cannot normalize spectrum with sum {sum}"
            )));
        }
        Self::with_sum_tol(probs.iter().map(|p| p / sum).collect(), 1e-9)
    }

    /// Uniform spectrum on `d` outcomes.
    pub fn uniform(d: usize) -> Self {
        Spectrum {
            probs: vec![1.0 / d as f64; d],
        }
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    /// Ambient dimension, including exact zeros.
    pub fn dim(&self) -> usize {
        self.probs.len()
    }

    /// Number of nonzero eigenvalues; evaluation drops the zeros.
    pub fn support(&self) -> usize {
        self.probs.iter().filter(|&&p| p > 0.0).count()
    }

    /// The nonzero eigenvalues (a prefix, since the vector is sorted).
    pub fn support_probs(&self) -> &[f64] {
        &self.probs[..self.support()]
    }
}

impl fmt::Debug for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Spectrum{:?}", self.probs)
    }
}
