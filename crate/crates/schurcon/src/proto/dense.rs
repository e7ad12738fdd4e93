//! Dense coding over a size-`D` Bell pair: `D^2` messages ride on one sent
//! system of size `D`, encoded by shift/phase unitaries and decoded by the
//! generalized Bell measurement.

use num_bigint::BigUint;
use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::proto::weyl::WeylOperatorSet;
use crate::young::dims::ln_dim_sn_irrep;
use crate::young::Partition;

/// Code parameters for one concentration outcome: message count
/// `M = (dim V)^2`, carrier size `N = dim V`. The encoder maps message `i`
/// to the shift/phase pair `(i / N, i mod N)` applied to the held half; the
/// decoder is the generalized Bell measurement on both halves.
#[derive(Clone, Debug)]
pub struct DenseCode {
    pub message_count: BigUint,
    pub carrier_dim: BigUint,
    /// `log2(M / N) = log2 N`: the entanglement effect in bits.
    pub effect_bits: f64,
}

impl DenseCode {
    /// Encoder map for desk-scale carriers: message to (shift, phase).
    pub fn weyl_index(&self, message: u64, dim: u64) -> Result<(u64, u64)> {
        if message >= dim * dim {
            return Err(Error::input(format!(
                "message {message} outside 0..{}",
                dim * dim
            )));
        }
        Ok((message / dim, message % dim))
    }
}

/// Code quadruple sizes for the Bell pair a concentration outcome leaves.
pub fn dense_code_params(shape: &Partition) -> Result<DenseCode> {
    let rows = shape.rows().max(1);
    let dim_v = crate::young::dim_sn_irrep(shape, rows)?;
    let effect_bits = ln_dim_sn_irrep(shape, rows)? / std::f64::consts::LN_2;
    Ok(DenseCode {
        message_count: &dim_v * &dim_v,
        carrier_dim: dim_v,
        effect_bits,
    })
}

/// Exact decode distribution for one message over an arbitrary resource
/// state (`D^2` amplitudes): the Bell-measurement probabilities after
/// encoding.
fn decode_distribution(
    weyl: &WeylOperatorSet,
    message: usize,
    resource: &[Complex64],
) -> Result<Vec<f64>> {
    let d = weyl.dim();
    if resource.len() != d * d {
        return Err(Error::input(format!(
            "resource state has dimension {}, expected {}",
            resource.len(),
            d * d
        )));
    }
    let (a, b) = (message / d, message % d);
    // Encode on the held (first) half: (X^a Z^b (x) I) |r>.
    let mut encoded = vec![Complex64::ZERO; d * d];
    for l in 0..d {
        let column: Vec<Complex64> = (0..d).map(|m| resource[m * d + l]).collect();
        let moved = weyl.apply(a, b, &column)?;
        for m in 0..d {
            encoded[m * d + l] = moved[m];
        }
    }
    Ok((0..d * d)
        .map(|i| {
            let basis = weyl.bell_basis_state(i / d, i % d);
            let overlap: Complex64 = basis
                .iter()
                .zip(&encoded)
                .map(|(x, y)| x.conj() * y)
                .sum();
            overlap.norm_sqr()
        })
        .collect())
}

/// Sends one message over a perfect size-`D` Bell pair and decodes it by
/// sampling the Bell measurement (deterministic for the perfect resource).
pub fn simulate_dense_coding<R: Rng + ?Sized>(
    dim: usize,
    message: usize,
    rng: &mut R,
) -> Result<usize> {
    let weyl = WeylOperatorSet::new(dim)?;
    if message >= dim * dim {
        return Err(Error::input(format!(
            "message {message} outside 0..{}",
            dim * dim
        )));
    }
    let probs = decode_distribution(&weyl, message, &weyl.bell_state())?;
    let pick: f64 = rng.random();
    let mut acc = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        acc += p;
        if pick < acc {
            return Ok(i);
        }
    }
    Ok(probs.len() - 1)
}

/// Average decode error over all `D^2` messages (uniform prior) for an
/// arbitrary resource state; zero exactly when the resource is the perfect
/// Bell pair.
pub fn dense_coding_error_rate(dim: usize, resource: &[Complex64]) -> Result<f64> {
    let weyl = WeylOperatorSet::new(dim)?;
    let m = dim * dim;
    let mut total_error = 0.0;
    for message in 0..m {
        let probs = decode_distribution(&weyl, message, resource)?;
        total_error += 1.0 - probs[message];
    }
    Ok((total_error / m as f64).max(0.0))
}
