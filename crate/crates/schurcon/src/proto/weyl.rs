//! Shift-and-phase unitaries on a size-`D` system and the generalized Bell
//! basis they generate: the encoding/correction alphabet for teleportation
//! and dense coding over a size-`D` Bell pair.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// Protocol simulations cap the Bell size here.
pub const MAX_BELL_SIZE: usize = 32;

/// The `D^2` unitaries `X^a Z^b` (shift by `a`, phase clock by `b`),
/// pairwise trace-orthogonal.
#[derive(Clone, Copy, Debug)]
pub struct WeylOperatorSet {
    dim: usize,
}

impl WeylOperatorSet {
    pub fn new(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::input("Bell size must be at least 1"));
        }
        if dim > MAX_BELL_SIZE {
            return Err(Error::input(format!(
                "Bell size {dim} exceeds the supported {MAX_BELL_SIZE}"
            )));
        }
        Ok(WeylOperatorSet { dim })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn omega_pow(&self, k: isize) -> Complex64 {
        let angle = 2.0 * std::f64::consts::PI * k as f64 / self.dim as f64;
        Complex64::new(angle.cos(), angle.sin())
    }

    /// Applies `X^a Z^b` to a vector:
    /// `(X^a Z^b psi)_j = omega^{b (j - a)} psi_{j - a mod D}`.
    pub fn apply(&self, a: usize, b: usize, psi: &[Complex64]) -> Result<Vec<Complex64>> {
        let d = self.dim;
        if psi.len() != d {
            return Err(Error::input(format!(
                "vector length {} does not match dimension {d}",
                psi.len()
            )));
        }
        Ok((0..d)
            .map(|j| {
                let src = (j + d - a % d) % d;
                self.omega_pow((b * src) as isize) * psi[src]
            })
            .collect())
    }

    pub fn matrix(&self, a: usize, b: usize) -> DMatrix<Complex64> {
        let d = self.dim;
        let mut m = DMatrix::zeros(d, d);
        for col in 0..d {
            m[((col + a) % d, col)] = self.omega_pow((b * col) as isize);
        }
        m
    }

    /// The canonical maximally entangled state `(1/sqrt D) sum_j |jj>`,
    /// indexed by `j * D + k`.
    pub fn bell_state(&self) -> Vec<Complex64> {
        let d = self.dim;
        let amp = Complex64::new(1.0 / (d as f64).sqrt(), 0.0);
        let mut v = vec![Complex64::ZERO; d * d];
        for j in 0..d {
            v[j * d + j] = amp;
        }
        v
    }

    /// The Bell basis vector `(X^a Z^b (x) I) |Phi>`.
    pub fn bell_basis_state(&self, a: usize, b: usize) -> Vec<Complex64> {
        let d = self.dim;
        let amp = 1.0 / (d as f64).sqrt();
        let mut v = vec![Complex64::ZERO; d * d];
        for m in 0..d {
            v[((m + a) % d) * d + m] = amp * self.omega_pow((b * m) as isize);
        }
        v
    }
}
