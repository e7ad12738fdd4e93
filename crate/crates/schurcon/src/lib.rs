//! Variable-size entanglement concentration by symmetric-group block
//! measurement.
//!
//! Measuring the Young-frame blocks of `n` copies of a bipartite pure state
//! on both sides always leaves a perfect maximally entangled pair; only its
//! size is random. This crate provides:
//!
//! - [`young`]: partitions, irrep dimensions, Schur polynomial evaluation,
//!   the closed-form outcome distribution, and an insertion-shape sampling
//!   oracle.
//! - [`exact`]: a desk-scale state-vector simulation of the two-sided block
//!   measurement, with multiplicity-space partial trace and Bell
//!   certification for qubit inputs.
//! - [`rates`]: entropies, the failure exponents of the concentrated size in
//!   primal and parametric form, exact tail sums, and the Stirling-type
//!   dimension bound report.
//! - [`proto`]: teleportation and dense-coding resource accounting over
//!   concentrated Bell pairs, with exact small-dimension protocol
//!   simulations.
//! - [`cli`]: the `schurcon` command-line frontend with deterministic JSON
//!   and CSV output.

pub mod cli;
pub mod error;
pub mod exact;
pub mod proto;
pub mod rates;
pub mod util;
pub mod young;

pub use error::{Error, Result};
