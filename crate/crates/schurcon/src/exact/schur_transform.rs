//! The coupled (total-spin) basis change for `n` qubits, built by coupling
//! one qubit at a time. Each block carries a spin irrep indexed by its
//! two-row diagram; the coupling-path multiplicity space is exactly the
//! symmetric-group factor, with one path per standard filling.

use nalgebra::DMatrix;

use crate::error::{Error, Result};
use crate::young::Partition;

/// Cap on the qubit count (a dense `2^n x 2^n` matrix is materialized).
pub const SCHUR_TRANSFORM_MAX_QUBITS: usize = 12;

/// One total-spin block in the coupled basis.
#[derive(Clone, Debug)]
pub struct SchurBlock {
    /// The two-row diagram `((n + 2j)/2, (n - 2j)/2)`.
    pub shape: Partition,
    /// Starting row of this block in the transform matrix.
    pub offset: usize,
    /// Spin-space dimension `2j + 1`.
    pub dim_u: usize,
    /// Number of coupling paths reaching spin `j`.
    pub dim_v: usize,
}

/// Real orthogonal change of basis from the computational basis to the
/// coupled basis `|j, m, path>`.
///
/// Rows are coupled basis vectors: row `offset + u * dim_v + v` is the state
/// with magnetic index `u` (m = j down to -j) on coupling path `v`. Blocks
/// are ordered by descending spin.
#[derive(Clone, Debug)]
pub struct QubitSchurTransform {
    pub n: usize,
    matrix: DMatrix<f64>,
    blocks: Vec<SchurBlock>,
}

impl QubitSchurTransform {
    /// `T[coupled, computational]`.
    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn blocks(&self) -> &[SchurBlock] {
        &self.blocks
    }

    /// Max-norm of `T^T T - I`.
    pub fn unitarity_residual(&self) -> f64 {
        let dim = self.matrix.nrows();
        let gram = self.matrix.transpose() * &self.matrix;
        let mut worst = 0.0f64;
        for i in 0..dim {
            for j in 0..dim {
                let expect = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((gram[(i, j)] - expect).abs());
            }
        }
        worst
    }
}

/// A family of coupled vectors sharing a spin and a coupling path: one
/// vector per magnetic index, each over the current computational basis.
struct PathFamily {
    /// Doubled spin `2j`.
    j2: usize,
    /// Vectors indexed by `u`, where `m = j - u` (doubled: `m2 = j2 - 2u`).
    vectors: Vec<Vec<f64>>,
}

pub fn qubit_schur_transform(n: usize) -> Result<QubitSchurTransform> {
    if n == 0 {
        return Err(Error::input("need at least one qubit"));
    }
    if n > SCHUR_TRANSFORM_MAX_QUBITS {
        return Err(Error::guard(format!(
            "coupled-basis transform supports n <= {SCHUR_TRANSFORM_MAX_QUBITS}, got {n}"
        )));
    }

    // Qubit |0> is spin up. Start with the single-qubit family.
    let mut families = vec![PathFamily {
        j2: 1,
        vectors: vec![vec![1.0, 0.0], vec![0.0, 1.0]],
    }];

    for k in 1..n {
        let dim = 1 << k;
        let mut next = Vec::with_capacity(families.len() * 2);
        for family in &families {
            let j2 = family.j2;
            // Raised spin j + 1/2 always exists.
            next.push(PathFamily {
                j2: j2 + 1,
                vectors: couple_up(j2, &family.vectors, dim),
            });
            // Lowered spin j - 1/2 exists for j > 0.
            if j2 >= 1 {
                if let Some(vectors) = couple_down(j2, &family.vectors, dim) {
                    next.push(PathFamily { j2: j2 - 1, vectors });
                }
            }
        }
        families = next;
    }

    // Group families by spin, descending; family order within a spin is the
    // deterministic generation order.
    let total = 1usize << n;
    let mut spins: Vec<usize> = families.iter().map(|f| f.j2).collect();
    spins.sort_unstable_by(|a, b| b.cmp(a));
    spins.dedup();

    let mut matrix = DMatrix::<f64>::zeros(total, total);
    let mut blocks = Vec::new();
    let mut offset = 0;
    for j2 in spins {
        let members: Vec<&PathFamily> = families.iter().filter(|f| f.j2 == j2).collect();
        let dim_u = j2 + 1;
        let dim_v = members.len();
        let shape = Partition::new(vec![(n + j2) / 2, (n - j2) / 2])?;
        for (v, family) in members.iter().enumerate() {
            for (u, vector) in family.vectors.iter().enumerate() {
                let row = offset + u * dim_v + v;
                for (col, &amp) in vector.iter().enumerate() {
                    matrix[(row, col)] = amp;
                }
            }
        }
        blocks.push(SchurBlock {
            shape,
            offset,
            dim_u,
            dim_v,
        });
        offset += dim_u * dim_v;
    }
    debug_assert_eq!(offset, total);

    Ok(QubitSchurTransform { n, matrix, blocks })
}

/// Couples `|j, m> (x) |1/2, s>` up to `j + 1/2`:
/// `|J, M> = sqrt((j+M+1/2)/(2j+1)) |M-1/2>|up> + sqrt((j-M+1/2)/(2j+1)) |M+1/2>|down>`.
fn couple_up(j2: usize, vectors: &[Vec<f64>], dim: usize) -> Vec<Vec<f64>> {
    let new_j2 = j2 + 1;
    let denom = (j2 + 1) as f64;
    (0..=new_j2)
        .map(|u| {
            let m2 = new_j2 as isize - 2 * u as isize;
            let mut out = vec![0.0; dim * 2];
            // (m2 - 1) partner with qubit |0>.
            if let Some(old) = magnetic_vector(j2, m2 - 1, vectors) {
                let c = (((j2 as isize + m2 + 1) / 2) as f64 / denom).sqrt();
                for (i, &a) in old.iter().enumerate() {
                    out[2 * i] = c * a;
                }
            }
            // (m2 + 1) partner with qubit |1>.
            if let Some(old) = magnetic_vector(j2, m2 + 1, vectors) {
                let c = (((j2 as isize - m2 + 1) / 2) as f64 / denom).sqrt();
                for (i, &a) in old.iter().enumerate() {
                    out[2 * i + 1] = c * a;
                }
            }
            out
        })
        .collect()
}

/// Couples down to `j - 1/2`:
/// `|J, M> = -sqrt((j-M+1/2)/(2j+1)) |M-1/2>|up> + sqrt((j+M+1/2)/(2j+1)) |M+1/2>|down>`.
fn couple_down(j2: usize, vectors: &[Vec<f64>], dim: usize) -> Option<Vec<Vec<f64>>> {
    if j2 == 0 {
        return None;
    }
    let new_j2 = j2 - 1;
    let denom = (j2 + 1) as f64;
    Some(
        (0..=new_j2)
            .map(|u| {
                let m2 = new_j2 as isize - 2 * u as isize;
                let mut out = vec![0.0; dim * 2];
                if let Some(old) = magnetic_vector(j2, m2 - 1, vectors) {
                    let c = -(((j2 as isize - m2 + 1) / 2) as f64 / denom).sqrt();
                    for (i, &a) in old.iter().enumerate() {
                        out[2 * i] = c * a;
                    }
                }
                if let Some(old) = magnetic_vector(j2, m2 + 1, vectors) {
                    let c = (((j2 as isize + m2 + 1) / 2) as f64 / denom).sqrt();
                    for (i, &a) in old.iter().enumerate() {
                        out[2 * i + 1] = c * a;
                    }
                }
                out
            })
            .collect(),
    )
}

fn magnetic_vector(j2: usize, m2: isize, vectors: &[Vec<f64>]) -> Option<&Vec<f64>> {
    if m2.unsigned_abs() > j2 || (j2 as isize - m2) % 2 != 0 {
        return None;
    }
    let u = ((j2 as isize - m2) / 2) as usize;
    vectors.get(u)
}
