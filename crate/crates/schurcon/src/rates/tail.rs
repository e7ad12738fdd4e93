//! Exact tail sums of the outcome distribution over dimension thresholds:
//! the finite-`n` quantities whose exponential decay the parametric and
//! primal exponents describe.

use crate::error::{Error, Result};
use crate::rates::exponent::Side;
use crate::young::dims::ln_dim_sn_irrep;
use crate::young::schur::{log2_schur, log2_sum_exp};
use crate::young::{enumerate_partitions, Spectrum};

const LN_2: f64 = std::f64::consts::LN_2;

fn check_guards(n: usize, d: usize, p: &Spectrum) -> Result<()> {
    if d != p.dim() {
        return Err(Error::input(format!(
            "d = {d} does not match spectrum dimension {}",
            p.dim()
        )));
    }
    if n == 0 {
        return Err(Error::input("tail sums need n >= 1"));
    }
    let cap = match d {
        1 | 2 => 10_000,
        3 => 500,
        _ => {
            return Err(Error::guard(format!(
                "tail sums support d <= 3, got {d}"
            )))
        }
    };
    if n > cap {
        return Err(Error::guard(format!(
            "tail sums support n <= {cap} for d = {d}, got {n}"
        )));
    }
    Ok(())
}

/// `log2` of the total outcome probability with `dim V` at most (low side)
/// or at least (high side) `2^{n R}`. Returns `-inf` for an empty tail.
pub fn tail_probability_log2(
    n: usize,
    d: usize,
    p: &Spectrum,
    r_bits: f64,
    side: Side,
) -> Result<f64> {
    check_guards(n, d, p)?;
    let threshold = n as f64 * r_bits;
    let mut terms = Vec::new();
    for lambda in enumerate_partitions(n, d)? {
        let log2_dim_v = ln_dim_sn_irrep(&lambda, d)? / LN_2;
        let included = match side {
            Side::Low => log2_dim_v <= threshold,
            Side::High => log2_dim_v >= threshold,
        };
        if !included {
            continue;
        }
        let term = log2_dim_v + log2_schur(&lambda, p);
        if term > f64::NEG_INFINITY {
            terms.push(term);
        }
    }
    Ok(log2_sum_exp(&terms).min(0.0))
}

/// The tail probability itself; underflows to zero when the exponent passes
/// the double-precision floor, so large-deviation work should prefer
/// [`tail_probability_log2`].
pub fn tail_probability(n: usize, d: usize, p: &Spectrum, r_bits: f64, side: Side) -> Result<f64> {
    Ok(tail_probability_log2(n, d, p, r_bits, side)?.exp2())
}
