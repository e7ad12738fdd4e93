//! Entropies, divergence, and the large-deviation analysis of the
//! concentrated Bell size: parametric and primal exponents, exact tail sums,
//! the Stirling residual, and the dimension-entropy bound report.

pub mod bound;
pub mod entropy;
pub mod exponent;
pub mod stirling;
pub mod tail;

pub use bound::{dim_entropy_bound_check, DimEntropyBoundReport};
pub use entropy::{psi, relative_entropy, shannon_entropy};
pub use exponent::{
    bh_exponent, exponent_parametric, exponent_primal, rate_curve, ExponentMethod,
    PrimalExponent, RateCurve, Side,
};
pub use stirling::{stirling_delta, stirling_delta_sup, StirlingDelta, STIRLING_DELTA_LIMIT};
pub use tail::{tail_probability, tail_probability_log2};
