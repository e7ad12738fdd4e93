//! Yield accounting: what the concentration delivers per copy, and the
//! dense-coding capacity it feeds.

use crate::error::Result;
use crate::rates::entropy::shannon_entropy;
use crate::util::compensated_sum;
use crate::young::{distribution, Partition, Spectrum};

#[derive(Clone, Debug)]
pub struct YieldOutcome {
    pub shape: Partition,
    pub probability: f64,
    /// `log2 dim V`: Bell qubits delivered on this branch.
    pub ebits: f64,
}

/// The concentration yield table for `n` copies.
#[derive(Clone, Debug)]
pub struct ConcentrationYield {
    pub n: usize,
    pub d: usize,
    pub spectrum: Spectrum,
    pub outcomes: Vec<YieldOutcome>,
    /// Expected Bell qubits per input copy.
    pub mean_ebits_per_copy: f64,
}

pub fn concentration_yield(n: usize, d: usize, p: &Spectrum) -> Result<ConcentrationYield> {
    let dist = distribution(n, d, p)?;
    let outcomes: Vec<YieldOutcome> = dist
        .entries
        .iter()
        .map(|e| YieldOutcome {
            shape: e.partition.clone(),
            probability: e.probability,
            ebits: e.ebits,
        })
        .collect();
    let mean =
        compensated_sum(outcomes.iter().map(|o| o.probability * o.ebits)) / n.max(1) as f64;
    Ok(ConcentrationYield {
        n,
        d,
        spectrum: p.clone(),
        outcomes,
        mean_ebits_per_copy: mean,
    })
}

/// Dense-coding capacity of the shared state: the entropy of either reduced
/// side (the two sides share the Schmidt spectrum, so it is symmetric by
/// construction).
pub fn capacity(p: &Spectrum) -> f64 {
    shannon_entropy(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(ps: &[f64]) -> Spectrum {
        Spectrum::new(ps.to_vec()).unwrap()
    }

    #[test]
    fn three_copy_yield() {
        let y = concentration_yield(3, 2, &spec(&[0.75, 0.25])).unwrap();
        // Only the mixed block yields an ebit: 0.375 * 1 / 3.
        assert!((y.mean_ebits_per_copy - 0.125).abs() < 1e-12);
    }

    #[test]
    fn two_copies_yield_nothing() {
        for p in [spec(&[0.9, 0.1]), spec(&[0.5, 0.5])] {
            let y = concentration_yield(2, 2, &p).unwrap();
            assert_eq!(y.mean_ebits_per_copy, 0.0);
        }
    }

    #[test]
    fn yield_approaches_the_entropy() {
        let p = spec(&[0.75, 0.25]);
        let h = shannon_entropy(&p);
        let y = concentration_yield(1000, 2, &p).unwrap();
        assert!(y.mean_ebits_per_copy <= h);
        assert!((y.mean_ebits_per_copy - h).abs() < 0.02);
    }

    #[test]
    fn yield_stays_below_log_dim() {
        let y = concentration_yield(10, 3, &spec(&[0.5, 0.3, 0.2])).unwrap();
        assert!(y.mean_ebits_per_copy <= (3.0f64).log2());
        let total: f64 = y.outcomes.iter().map(|o| o.probability).sum();
        assert!((total - 1.0).abs() < 1e-9);
    }

    #[test]
    fn capacity_is_the_entropy_and_is_order_free() {
        assert!((capacity(&spec(&[0.5, 0.5])) - 1.0).abs() < 1e-15);
        assert_eq!(capacity(&spec(&[1.0, 0.0])), 0.0);
        assert!((capacity(&spec(&[0.75, 0.25])) - 0.8112781244591328).abs() < 1e-12);
        assert_eq!(
            capacity(&spec(&[0.25, 0.75])),
            capacity(&spec(&[0.75, 0.25]))
        );
    }
}
