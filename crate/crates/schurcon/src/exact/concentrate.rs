//! Full concentration for qubit inputs: rotate both sides into the coupled
//! basis, restrict to the agreeing block, and trace out the spin pair. What
//! remains on the path pair is certified against the canonical maximally
//! entangled state of the block's path dimension.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::measure::OUTCOME_PROBABILITY_FLOOR;
use crate::exact::schur_transform::qubit_schur_transform;
use crate::exact::state::PureBipartiteState;
use crate::young::Partition;

/// Copy-count cap for the concentration path.
pub const CONCENTRATE_MAX_COPIES: usize = 6;

/// One concentration branch: the measured diagram, the size of the perfect
/// pair it leaves behind, and its certification data.
#[derive(Clone, Debug)]
pub struct ConcentrationOutcome {
    pub shape: Partition,
    /// Path dimension `dim V`: the Bell size left on the path pair.
    pub bell_size: usize,
    pub probability: f64,
    /// Overlap of the traced-out path-pair state with the canonical
    /// maximally entangled state of size `bell_size`.
    pub fidelity: f64,
    /// Density matrix on the path pair, row-major over `(v, w)` pairs.
    v_pair_density: DMatrix<Complex64>,
}

impl ConcentrationOutcome {
    /// The path-pair state as a pure vector: the dominant eigenvector of the
    /// traced density, phase-fixed so its largest entry is real positive.
    /// Length `bell_size^2`, indexed by `v * bell_size + w`.
    pub fn v_pair_state(&self) -> Vec<Complex64> {
        let eig = self.v_pair_density.clone().symmetric_eigen();
        let top = eig
            .eigenvalues
            .iter()
            .enumerate()
            .max_by(|a, b| a.1.total_cmp(b.1))
            .map(|(i, _)| i)
            .expect("nonempty");
        let column = eig.eigenvectors.column(top);
        let lead = column
            .iter()
            .max_by(|a, b| a.norm_sqr().total_cmp(&b.norm_sqr()))
            .copied()
            .expect("nonempty");
        let phase = lead / lead.norm();
        column.iter().map(|z| z * phase.conj()).collect()
    }

    pub fn v_pair_density(&self) -> &DMatrix<Complex64> {
        &self.v_pair_density
    }
}

/// Runs the concentration on a qubit input: block measurement in the coupled
/// basis on both sides, then the partial trace over the spin pair.
pub fn concentrate(state: &PureBipartiteState) -> Result<Vec<ConcentrationOutcome>> {
    if state.local_dim() != 2 {
        return Err(Error::UnsupportedDimension(format!(
            "concentration runs on qubit inputs; got local dimension {} \
             (use the block measurement for spectrum checks at other dimensions)",
            state.local_dim()
        )));
    }
    let n = state.copies();
    if n > CONCENTRATE_MAX_COPIES {
        return Err(Error::guard(format!(
            "concentration supports n <= {CONCENTRATE_MAX_COPIES}, got {n}"
        )));
    }
    let transform = qubit_schur_transform(n)?;
    let t = transform.matrix().map(Complex64::from);
    // Amplitude matrix in the coupled basis on both sides.
    let coupled = &t * state.as_matrix() * t.transpose();

    let mut outcomes = Vec::new();
    for block in transform.blocks() {
        let (du, dv) = (block.dim_u, block.dim_v);
        let size = du * dv;
        let sub = coupled.view((block.offset, block.offset), (size, size));
        let probability: f64 = sub.iter().map(|z| z.norm_sqr()).sum();
        if probability <= OUTCOME_PROBABILITY_FLOOR {
            continue;
        }
        let scale = probability.sqrt();

        // Index (m, v) = m * dv + v on each side. Partial trace over the
        // spin indices leaves the path-pair density.
        let mut v_pair_density = DMatrix::<Complex64>::zeros(dv * dv, dv * dv);
        for v in 0..dv {
            for w in 0..dv {
                for v2 in 0..dv {
                    for w2 in 0..dv {
                        let mut acc = Complex64::ZERO;
                        for m in 0..du {
                            for m2 in 0..du {
                                let x = sub[(m * dv + v, m2 * dv + w)] / scale;
                                let y = sub[(m * dv + v2, m2 * dv + w2)] / scale;
                                acc += x * y.conj();
                            }
                        }
                        v_pair_density[(v * dv + w, v2 * dv + w2)] = acc;
                    }
                }
            }
        }

        // Overlap with the canonical maximally entangled state
        // (1/sqrt(dv)) sum_v |v, v>.
        let mut fidelity = 0.0;
        for v in 0..dv {
            for v2 in 0..dv {
                fidelity += v_pair_density[(v * dv + v, v2 * dv + v2)].re;
            }
        }
        fidelity /= dv as f64;

        outcomes.push(ConcentrationOutcome {
            shape: block.shape.clone(),
            bell_size: dv,
            probability,
            fidelity,
            v_pair_density,
        });
    }
    Ok(outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::state::build_input_state;
    use crate::young::Spectrum;

    fn spec(ps: &[f64]) -> Spectrum {
        Spectrum::new(ps.to_vec()).unwrap()
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn three_copies_yield_one_ebit_branch() {
        let state = build_input_state(&spec(&[0.75, 0.25]), 3).unwrap();
        let outcomes = concentrate(&state).unwrap();
        let mixed = outcomes.iter().find(|o| o.shape == part(&[2, 1])).unwrap();
        assert_eq!(mixed.bell_size, 2);
        assert!((mixed.probability - 0.375).abs() < 1e-10);
        assert!((mixed.fidelity - 1.0).abs() < 1e-10, "{}", mixed.fidelity);
        // The extracted pair is the canonical Bell state.
        let v = mixed.v_pair_state();
        let r = 0.5f64.sqrt();
        assert!((v[0].re - r).abs() < 1e-8 && v[0].im.abs() < 1e-10);
        assert!((v[3].re - r).abs() < 1e-8 && v[3].im.abs() < 1e-10);
        assert!(v[1].norm() < 1e-8 && v[2].norm() < 1e-8);
    }

    #[test]
    fn two_copies_have_scalar_path_spaces() {
        for p in [spec(&[0.9, 0.1]), spec(&[0.5, 0.5])] {
            let state = build_input_state(&p, 2).unwrap();
            for outcome in concentrate(&state).unwrap() {
                assert_eq!(outcome.bell_size, 1);
                assert!((outcome.fidelity - 1.0).abs() < 1e-10);
            }
        }
    }

    #[test]
    fn uniform_four_copy_balanced_block() {
        let state = build_input_state(&spec(&[0.5, 0.5]), 4).unwrap();
        let outcomes = concentrate(&state).unwrap();
        let balanced = outcomes.iter().find(|o| o.shape == part(&[2, 2])).unwrap();
        assert_eq!(balanced.bell_size, 2);
        assert!((balanced.fidelity - 1.0).abs() < 1e-10);
        // dim U * dim V / 2^4 = 1 * 2 / 16.
        assert!((balanced.probability - 2.0 / 16.0).abs() < 1e-10);
    }

    #[test]
    fn probabilities_match_block_measurement() {
        use crate::exact::measure::block_probabilities;
        let state = build_input_state(&spec(&[0.7, 0.3]), 4).unwrap();
        let outcomes = concentrate(&state).unwrap();
        let (probs, _) = block_probabilities(&state).unwrap();
        for outcome in &outcomes {
            let matching = probs.iter().find(|(s, _)| *s == outcome.shape).unwrap();
            assert!((outcome.probability - matching.1).abs() < 1e-10);
        }
    }

    #[test]
    fn rejects_non_qubit_inputs() {
        let state = build_input_state(&spec(&[0.5, 0.3, 0.2]), 2).unwrap();
        assert!(matches!(
            concentrate(&state),
            Err(Error::UnsupportedDimension(_))
        ));
    }

    #[test]
    fn copy_guard() {
        let state = build_input_state(&spec(&[0.5, 0.5]), 7).unwrap();
        assert!(matches!(concentrate(&state), Err(Error::Guard(_))));
    }
}
