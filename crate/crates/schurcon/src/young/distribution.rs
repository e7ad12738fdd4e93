//! The block-measurement outcome distribution over Young diagrams:
//! `P(lambda) = dim V_lambda * s_lambda(p)`.

use num_bigint::BigUint;

use crate::error::{Error, Result};
use crate::util::compensated_sum;
use crate::young::dims::{dim_sn_irrep, dim_su_irrep, ln_dim_sn_irrep};
use crate::young::partition::{enumerate_partitions, partition_count_capped, Partition};
use crate::young::schur::{log2_schur, schur_polynomial, SchurEvaluator};
use crate::young::Spectrum;

/// Enumeration guard: refuse distributions with more outcomes than this.
pub const MAX_OUTCOMES: u64 = 10_000_000;

/// Copy count up to which probabilities come from the linear-domain Schur
/// route; larger instances switch to the log-domain route.
const LINEAR_ROUTE_MAX_N: usize = 64;

/// One measurement outcome: the diagram, its probability, both irrep
/// dimensions, and the yielded Bell size in qubits.
#[derive(Clone, Debug)]
pub struct SchurWeylEntry {
    pub partition: Partition,
    pub probability: f64,
    pub dim_v: BigUint,
    pub dim_u: BigUint,
    /// `log2 dim V`: the number of Bell qubits this outcome yields.
    pub ebits: f64,
}

/// The full outcome distribution for `n` copies at local dimension `d`.
#[derive(Clone, Debug)]
pub struct SchurWeylDistribution {
    pub n: usize,
    pub d: usize,
    pub spectrum: Spectrum,
    /// Every diagram of weight `n` with at most `d` rows, in descending
    /// lexicographic order.
    pub entries: Vec<SchurWeylEntry>,
}

impl SchurWeylDistribution {
    /// Compensated total of the entry probabilities (should be 1).
    pub fn total_probability(&self) -> f64 {
        compensated_sum(self.entries.iter().map(|e| e.probability))
    }

    pub fn entry(&self, partition: &Partition) -> Option<&SchurWeylEntry> {
        self.entries.iter().find(|e| &e.partition == partition)
    }
}

/// Probability of a single outcome: `dim V_lambda * s_lambda(p)`.
pub fn schur_weyl_prob(lambda: &Partition, p: &Spectrum) -> f64 {
    let rows = lambda.rows().max(1);
    let dim_v = dim_sn_irrep(lambda, rows).expect("rows fit by construction");
    let dim_v = biguint_to_f64(&dim_v);
    (dim_v * schur_polynomial(lambda, p)).clamp(0.0, 1.0)
}

/// `log2` of the outcome probability, finite where the linear product
/// over- or underflows.
pub fn log2_schur_weyl_prob(lambda: &Partition, p: &Spectrum) -> f64 {
    let rows = lambda.rows().max(1);
    let ln_dim = ln_dim_sn_irrep(lambda, rows).expect("rows fit by construction");
    ln_dim / std::f64::consts::LN_2 + log2_schur(lambda, p)
}

fn biguint_to_f64(x: &BigUint) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::INFINITY)
}

/// Computes the full outcome distribution.
///
/// `d` must match the spectrum dimension. Probabilities use the
/// complete-homogeneous determinant route up to moderate `n` and the
/// log-domain route past it; dimensions are exact integers throughout.
pub fn distribution(n: usize, d: usize, p: &Spectrum) -> Result<SchurWeylDistribution> {
    if d != p.dim() {
        return Err(Error::input(format!(
            "d = {d} does not match spectrum dimension {}",
            p.dim()
        )));
    }
    let count = partition_count_capped(n, d, MAX_OUTCOMES + 1);
    if count > MAX_OUTCOMES {
        return Err(Error::guard(format!(
            "distribution over n = {n}, d = {d} exceeds {MAX_OUTCOMES} outcomes"
        )));
    }
    let linear_route = n <= LINEAR_ROUTE_MAX_N;
    if !linear_route && p.support() > 3 {
        // The log-domain Schur recursion is kept to three nonzero
        // eigenvalues; beyond that the linear route must not underflow.
        let p_min = p.support_probs().last().copied().unwrap();
        if (n as f64) * p_min.log2() < -950.0 {
            return Err(Error::guard(format!(
                "n = {n} with spectrum floor {p_min:e} underflows the linear route"
            )));
        }
    }

    // The branching evaluator keeps full relative accuracy on peaked
    // spectra where the determinant route cancels; its cost is fine up to
    // four levels.
    let mut branching = (linear_route && p.support() <= 4).then(|| SchurEvaluator::new(p));
    let entries = enumerate_partitions(n, d)?
        .into_iter()
        .map(|partition| {
            let dim_v = dim_sn_irrep(&partition, d)?;
            let dim_u = dim_su_irrep(&partition, d)?;
            let ln_dim_v = if dim_v == BigUint::from(1u32) {
                0.0
            } else {
                ln_dim_sn_irrep(&partition, d)?
            };
            let ebits = ln_dim_v / std::f64::consts::LN_2;
            let probability = if let Some(eval) = branching.as_mut() {
                let dim_v_f64 = biguint_to_f64(&dim_v);
                (dim_v_f64 * eval.eval(&partition)).clamp(0.0, 1.0)
            } else if linear_route {
                schur_weyl_prob(&partition, p)
            } else if p.support() > 3 {
                let s = schur_polynomial(&partition, p);
                (ebits + s.log2()).exp2().clamp(0.0, 1.0)
            } else {
                log2_schur_weyl_prob(&partition, p).exp2().clamp(0.0, 1.0)
            };
            Ok(SchurWeylEntry {
                partition,
                probability,
                dim_v,
                dim_u,
                ebits,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(SchurWeylDistribution {
        n,
        d,
        spectrum: p.clone(),
        entries,
    })
}
