//! Teleportation over a size-`D` Bell pair with the shift/phase Bell
//! measurement: every branch restores the input exactly, at the classical
//! cost of the two measurement symbols.

use num_complex::Complex64;
use rand::Rng;

use crate::error::{Error, Result};
use crate::proto::weyl::WeylOperatorSet;

/// Resource ledger for sharing (or sending) a size-`D` perfect pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TeleportResources {
    pub qubits: f64,
    pub classical_bits: f64,
}

/// Qubit and classical-bit cost of teleporting through a size-`D` pair:
/// `(log2 D, 2 log2 D)`.
pub fn teleport_resources(bell_size: usize) -> Result<TeleportResources> {
    if bell_size == 0 {
        return Err(Error::input("Bell size must be at least 1"));
    }
    let qubits = (bell_size as f64).log2();
    Ok(TeleportResources {
        qubits,
        classical_bits: 2.0 * qubits,
    })
}

/// One measurement branch of a teleportation run.
#[derive(Clone, Debug)]
pub struct TeleportBranch {
    /// Alice's two classical symbols (shift, phase), each in `0..D`.
    pub symbols: (usize, usize),
    pub probability: f64,
    /// Overlap of Bob's corrected output with the input.
    pub fidelity: f64,
}

/// A sampled run: the branch that fired and the classical cost paid.
#[derive(Clone, Debug)]
pub struct TeleportationRun {
    pub fidelity: f64,
    pub classical_symbols: (usize, usize),
    pub classical_bits: f64,
}

fn check_input(dim: usize, input: &[Complex64]) -> Result<()> {
    if input.len() != dim {
        return Err(Error::input(format!(
            "input state has dimension {}, expected {dim}",
            input.len()
        )));
    }
    let norm: f64 = input.iter().map(|z| z.norm_sqr()).sum();
    if (norm - 1.0).abs() > 1e-9 {
        return Err(Error::input(format!(
            "input state has squared norm {norm}, not normalized"
        )));
    }
    Ok(())
}

/// Exact branch table of the teleportation protocol run over an arbitrary
/// resource state on `A' (x) B` (length `D^2`, index `m * D + l`).
///
/// Alice measures `(A, A')` in the shift/phase Bell basis and Bob applies
/// the matching correction `X^a Z^b`. Branches with vanishing probability
/// are dropped.
pub fn teleportation_branches(
    dim: usize,
    input: &[Complex64],
    resource: &[Complex64],
) -> Result<Vec<TeleportBranch>> {
    let weyl = WeylOperatorSet::new(dim)?;
    check_input(dim, input)?;
    if resource.len() != dim * dim {
        return Err(Error::input(format!(
            "resource state has dimension {}, expected {}",
            resource.len(),
            dim * dim
        )));
    }

    let mut branches = Vec::new();
    for a in 0..dim {
        for b in 0..dim {
            // <Phi_ab|_{A A'} (|psi>_A |r>_{A'B}):
            // u_l = (1/sqrt D) sum_m conj(omega^{b m}) psi_{m+a} r_{m l}.
            let mut bob = vec![Complex64::ZERO; dim];
            for m in 0..dim {
                let phase = weyl_phase(dim, b, m).conj();
                let amp = phase * input[(m + a) % dim] / (dim as f64).sqrt();
                for (l, out) in bob.iter_mut().enumerate() {
                    *out += amp * resource[m * dim + l];
                }
            }
            let probability: f64 = bob.iter().map(|z| z.norm_sqr()).sum();
            if probability < 1e-14 {
                continue;
            }
            let scale = probability.sqrt();
            let corrected = weyl.apply(a, b, &bob)?;
            let overlap: Complex64 = input
                .iter()
                .zip(&corrected)
                .map(|(x, y)| x.conj() * y)
                .sum();
            let fidelity = (overlap.norm() / scale).powi(2);
            branches.push(TeleportBranch {
                symbols: (a, b),
                probability,
                fidelity,
            });
        }
    }
    Ok(branches)
}

fn weyl_phase(dim: usize, b: usize, m: usize) -> Complex64 {
    let angle = 2.0 * std::f64::consts::PI * (b * m) as f64 / dim as f64;
    Complex64::new(angle.cos(), angle.sin())
}

/// Haar-random pure state: a normalized complex Gaussian vector.
pub fn haar_random_state<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Vec<Complex64> {
    let gaussian = |rng: &mut R| {
        let u: f64 = 1.0 - rng.random::<f64>();
        let v: f64 = rng.random();
        (-2.0 * u.ln()).sqrt() * (2.0 * std::f64::consts::PI * v).cos()
    };
    let mut state: Vec<Complex64> = (0..dim)
        .map(|_| Complex64::new(gaussian(rng), gaussian(rng)))
        .collect();
    let norm: f64 = state.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    for z in &mut state {
        *z /= norm;
    }
    state
}

/// Teleports `input` over a perfect size-`D` Bell pair, sampling the
/// measurement branch. The fidelity is 1 on every branch; the transcript
/// carries the `2 log2 D` classical bits.
pub fn simulate_teleportation<R: Rng + ?Sized>(
    dim: usize,
    input: &[Complex64],
    rng: &mut R,
) -> Result<TeleportationRun> {
    let weyl = WeylOperatorSet::new(dim)?;
    let branches = teleportation_branches(dim, input, &weyl.bell_state())?;
    let pick: f64 = rng.random::<f64>();
    let mut acc = 0.0;
    let mut chosen = branches.last().expect("perfect resource has branches");
    for branch in &branches {
        acc += branch.probability;
        if pick < acc {
            chosen = branch;
            break;
        }
    }
    Ok(TeleportationRun {
        fidelity: chosen.fidelity,
        classical_symbols: chosen.symbols,
        classical_bits: 2.0 * (dim as f64).log2(),
    })
}
