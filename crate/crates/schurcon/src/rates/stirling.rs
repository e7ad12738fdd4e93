use serde::Serialize;

use crate::error::{Error, Result};
use crate::young::dims::ln_factorial;

/// Limit of the Stirling residual: `(1/2) ln 2 pi`.
pub const STIRLING_DELTA_LIMIT: f64 = 0.9189385332046727;

/// The residual `delta_n` in `n! = e^{delta_n} n^{n + 1/2} e^{-n}`.
///
/// Decreases monotonically from `delta_1 = 1` toward
/// [`STIRLING_DELTA_LIMIT`]; its supremum (used as the bound constant) is
/// the first value.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct StirlingDelta {
    pub n: usize,
    pub delta: f64,
}

pub fn stirling_delta(n: usize) -> Result<StirlingDelta> {
    if n == 0 {
        return Err(Error::input("stirling residual defined for n >= 1"));
    }
    let nf = n as f64;
    Ok(StirlingDelta {
        n,
        delta: ln_factorial(n) - (nf + 0.5) * nf.ln() + nf,
    })
}

/// `sup_n delta_n = delta_1 = 1`.
pub fn stirling_delta_sup() -> f64 {
    stirling_delta(1).expect("n = 1 valid").delta
}
