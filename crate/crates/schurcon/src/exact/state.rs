//! Dense amplitudes for `n` copies of a bipartite pure state, indexed by the
//! pair of local multi-indices.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::exact::permutation::Permutation;
use crate::util::compensated_sum;
use crate::young::Spectrum;

/// Total amplitude count `d^(2n)` must stay at or below this.
pub const MEMORY_GUARD: usize = 1 << 26;

/// Which local system a permutation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// A pure state on `n` copies of a `d x d` bipartite system, stored as the
/// full amplitude vector over pairs `(a, b)` of local computational
/// multi-indices. Factor 0 is the most significant digit of an index.
#[derive(Clone, Debug)]
pub struct PureBipartiteState {
    n: usize,
    d: usize,
    amps: Vec<Complex64>,
}

impl PureBipartiteState {
    pub fn from_amplitudes(n: usize, d: usize, amps: Vec<Complex64>) -> Result<Self> {
        let dn = checked_local_dim(n, d)?;
        if amps.len() != dn * dn {
            return Err(Error::input(format!(
                "amplitude vector has length {}, expected {}",
                amps.len(),
                dn * dn
            )));
        }
        Ok(PureBipartiteState { n, d, amps })
    }

    pub fn copies(&self) -> usize {
        self.n
    }

    pub fn local_dim(&self) -> usize {
        self.d
    }

    /// `d^n`, the dimension of one side.
    pub fn side_dim(&self) -> usize {
        self.d.pow(self.n as u32)
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitude(&self, a: usize, b: usize) -> Complex64 {
        self.amps[a * self.side_dim() + b]
    }

    pub fn norm_squared(&self) -> f64 {
        compensated_sum(self.amps.iter().map(|z| z.norm_sqr()))
    }

    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm_squared().sqrt();
        if norm < 1e-300 {
            return Err(Error::input("cannot normalize the zero vector"));
        }
        let mut out = self.clone();
        for z in &mut out.amps {
            *z /= norm;
        }
        Ok(out)
    }

    /// The amplitude matrix `Psi[a, b]` across the A|B cut.
    pub fn as_matrix(&self) -> DMatrix<Complex64> {
        let dn = self.side_dim();
        DMatrix::from_fn(dn, dn, |a, b| self.amps[a * dn + b])
    }

    /// Squared Schmidt coefficients across the A|B cut, grouped within an
    /// absolute tolerance of 1e-9, in descending order. Near-zero values are
    /// dropped.
    pub fn schmidt_spectrum(&self) -> Vec<(f64, usize)> {
        let psi = self.as_matrix();
        let rho_a = &psi * psi.adjoint();
        let mut values: Vec<f64> = rho_a
            .symmetric_eigen()
            .eigenvalues
            .iter()
            .map(|&v| v.max(0.0))
            .collect();
        values.sort_by(|a, b| b.total_cmp(a));
        group_values(&values, 1e-9, 1e-10)
    }
}

fn checked_local_dim(n: usize, d: usize) -> Result<usize> {
    if d == 0 {
        return Err(Error::input("local dimension must be at least 1"));
    }
    let bits = (d as f64).log2() * 2.0 * n as f64;
    if bits > 26.0 + 1e-9 {
        return Err(Error::guard(format!(
            "state of {n} copies at local dimension {d} needs d^(2n) > 2^26 amplitudes"
        )));
    }
    Ok(d.pow(n as u32))
}

fn group_values(sorted_desc: &[f64], tol: f64, drop_below: f64) -> Vec<(f64, usize)> {
    let mut out: Vec<(f64, usize)> = Vec::new();
    for &v in sorted_desc {
        if v < drop_below {
            continue;
        }
        match out.last_mut() {
            Some((rep, count)) if (*rep - v).abs() <= tol => {
                // Track the running mean of the group.
                *rep = (*rep * *count as f64 + v) / (*count as f64 + 1.0);
                *count += 1;
            }
            _ => out.push((v, 1)),
        }
    }
    out
}

/// Builds `(sum_i sqrt(p_i) |ii>)^(tensor n)` with all A factors grouped
/// before all B factors.
pub fn build_input_state(p: &Spectrum, n: usize) -> Result<PureBipartiteState> {
    let d = p.dim();
    let dn = checked_local_dim(n, d)?;
    let mut amps = vec![Complex64::ZERO; dn * dn];
    // Only diagonal pairs (a, a) carry amplitude sqrt(prod_k p_{a_k}).
    for a in 0..dn {
        let mut prob = 1.0;
        let mut rest = a;
        for _ in 0..n {
            prob *= p.probs()[rest % d];
            rest /= d;
        }
        amps[a * dn + a] = Complex64::new(prob.sqrt(), 0.0);
    }
    PureBipartiteState::from_amplitudes(n, d, amps)
}

/// Index lookup table for one side: entry `a` is the source index whose
/// digits are `a`'s digits pulled through `sigma`.
pub(crate) fn permutation_index_table(sigma: &Permutation, n: usize, d: usize) -> Vec<usize> {
    let dn = d.pow(n as u32);
    let mut table = Vec::with_capacity(dn);
    let mut digits = vec![0usize; n];
    for a in 0..dn {
        let mut rest = a;
        for k in (0..n).rev() {
            digits[k] = rest % d;
            rest /= d;
        }
        let mut src = 0usize;
        for k in 0..n {
            src = src * d + digits[sigma.image(k)];
        }
        table.push(src);
    }
    table
}

/// Applies the factor permutation `sigma` on one side:
/// `(pi(sigma) psi)(a) = psi(a o sigma)`, so that
/// `pi(sigma) pi(tau) = pi(sigma o tau)`.
pub fn permutation_action(
    sigma: &Permutation,
    side: Side,
    state: &PureBipartiteState,
) -> Result<PureBipartiteState> {
    if sigma.len() != state.n {
        return Err(Error::input(format!(
            "permutation of {} positions applied to {} copies",
            sigma.len(),
            state.n
        )));
    }
    let table = permutation_index_table(sigma, state.n, state.d);
    Ok(apply_side_table(&table, side, state))
}

pub(crate) fn apply_side_table(
    table: &[usize],
    side: Side,
    state: &PureBipartiteState,
) -> PureBipartiteState {
    let dn = state.side_dim();
    let mut amps = vec![Complex64::ZERO; dn * dn];
    match side {
        Side::A => {
            for (a, &src_index) in table.iter().enumerate() {
                let src = src_index * dn;
                let dst = a * dn;
                amps[dst..dst + dn].copy_from_slice(&state.amps[src..src + dn]);
            }
        }
        Side::B => {
            for a in 0..dn {
                let row = a * dn;
                for b in 0..dn {
                    amps[row + b] = state.amps[row + table[b]];
                }
            }
        }
    }
    PureBipartiteState {
        n: state.n,
        d: state.d,
        amps,
    }
}

/// Adds `weight * pi(sigma_table) applied to side` into an accumulator;
/// the inner loop of the block projectors.
pub(crate) fn accumulate_side_table(
    acc: &mut [Complex64],
    weight: f64,
    table: &[usize],
    side: Side,
    state: &PureBipartiteState,
) {
    let dn = state.side_dim();
    match side {
        Side::A => {
            for (a, &src_index) in table.iter().enumerate() {
                let src = src_index * dn;
                let dst = a * dn;
                for b in 0..dn {
                    acc[dst + b] += weight * state.amps[src + b];
                }
            }
        }
        Side::B => {
            for a in 0..dn {
                let row = a * dn;
                for b in 0..dn {
                    acc[row + b] += weight * state.amps[row + table[b]];
                }
            }
        }
    }
}
