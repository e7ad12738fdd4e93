//! Schur polynomial evaluation at a spectrum.
//!
//! The default route expands the diagram's row determinant in complete
//! homogeneous polynomials, which stay well-behaved for repeated eigenvalues.
//! The bialternant ratio is kept as an independent cross-check; it divides by
//! the Vandermonde factor and is refused for coincident eigenvalues. A
//! log-domain evaluator covers copy counts far past double-precision range.

use crate::error::{Error, Result};
use crate::young::{Partition, Spectrum};

/// Eigenvalue gap below which the bialternant route refuses to evaluate.
const COINCIDENT_GAP: f64 = 1e-9;

/// Complete homogeneous symmetric polynomial values `h_0..h_max` at `xs`,
/// by the one-variable-at-a-time recurrence `h_k(m vars) = h_k(m-1) + x_m h_{k-1}(m vars)`.
fn complete_homogeneous(xs: &[f64], max_degree: usize) -> Vec<f64> {
    let mut h = vec![0.0; max_degree + 1];
    h[0] = 1.0;
    for &x in xs {
        for k in 1..=max_degree {
            h[k] += x * h[k - 1];
        }
    }
    h
}

/// Determinant by partial-pivot elimination; the matrices here are at most
/// `d x d`.
#[allow(clippy::needless_range_loop)] // rows `row` and `col` alias the same matrix
fn determinant(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].abs().total_cmp(&m[b][col].abs()))
            .unwrap();
        if m[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        det *= m[col][col];
        for row in (col + 1)..n {
            let f = m[row][col] / m[col][col];
            for k in col..n {
                m[row][k] -= f * m[col][k];
            }
        }
    }
    det
}

/// Evaluates `s_lambda(p)` by the row determinant in complete homogeneous
/// polynomials. Zero eigenvalues are dropped first; a diagram with more rows
/// than nonzero eigenvalues evaluates to exactly zero.
pub fn schur_polynomial(lambda: &Partition, p: &Spectrum) -> f64 {
    let xs = p.support_probs();
    let rows = lambda.rows();
    if rows > xs.len() {
        return 0.0;
    }
    if rows == 0 {
        return 1.0;
    }
    let max_degree = lambda.part(0) + rows - 1;
    let h = complete_homogeneous(xs, max_degree);
    let m: Vec<Vec<f64>> = (0..rows)
        .map(|i| {
            (0..rows)
                .map(|j| {
                    // h_{lambda_i - i + j}, zero for negative degree.
                    let deg = lambda.part(i) as isize - i as isize + j as isize;
                    if deg < 0 {
                        0.0
                    } else {
                        h[deg as usize]
                    }
                })
                .collect()
        })
        .collect();
    determinant(m).max(0.0)
}

/// Evaluates `s_lambda(p)` as the ratio of the shifted power determinant to
/// the Vandermonde determinant. Cross-check route only; errors out when two
/// eigenvalues coincide.
pub fn schur_bialternant(lambda: &Partition, p: &Spectrum) -> Result<f64> {
    let xs = p.support_probs();
    let s = xs.len();
    if lambda.rows() > s {
        return Ok(0.0);
    }
    for i in 0..s {
        for j in (i + 1)..s {
            if (xs[i] - xs[j]).abs() < COINCIDENT_GAP {
                return Err(Error::DegenerateSpectrum);
            }
        }
    }
    if s == 1 {
        return Ok(xs[0].powi(lambda.part(0) as i32));
    }
    let numerator: Vec<Vec<f64>> = (0..s)
        .map(|i| {
            (0..s)
                .map(|j| xs[i].powi((lambda.part(j) + s - 1 - j) as i32))
                .collect()
        })
        .collect();
    let mut vandermonde = 1.0;
    for i in 0..s {
        for j in (i + 1)..s {
            vandermonde *= xs[i] - xs[j];
        }
    }
    Ok(determinant(numerator) / vandermonde)
}

/// `log2 s_lambda(p)`, exact in the exponent range where the linear-domain
/// routes underflow. Returns `-inf` for diagrams with more rows than the
/// support.
pub fn log2_schur(lambda: &Partition, p: &Spectrum) -> f64 {
    let xs = p.support_probs();
    let rows = lambda.rows();
    if rows > xs.len() {
        return f64::NEG_INFINITY;
    }
    let parts: Vec<usize> = (0..xs.len()).map(|i| lambda.part(i)).collect();
    log2_schur_rec(&parts, xs)
}

fn log2_schur_rec(parts: &[usize], xs: &[f64]) -> f64 {
    debug_assert_eq!(parts.len(), xs.len());
    match xs.len() {
        0 => 0.0,
        1 => parts[0] as f64 * xs[0].log2(),
        2 => log2_schur_two_rows(parts[0], parts[1], xs[0], xs[1]),
        s => {
            // Branch on the last variable: sum over interlacing subdiagrams.
            let last = xs[s - 1];
            let weight: usize = parts.iter().sum();
            let mut terms = Vec::new();
            let mut mu = vec![0usize; s - 1];
            branch_interlacing(parts, 0, &mut mu, &mut |mu: &[usize]| {
                let inner: usize = mu.iter().sum();
                let t = (weight - inner) as f64 * last.log2() + log2_schur_rec(mu, &xs[..s - 1]);
                terms.push(t);
            });
            log2_sum_exp(&terms)
        }
    }
}

fn branch_interlacing(
    parts: &[usize],
    at: usize,
    mu: &mut Vec<usize>,
    visit: &mut impl FnMut(&[usize]),
) {
    if at == parts.len() - 1 {
        visit(mu);
        return;
    }
    let hi = parts[at];
    let lo = parts[at + 1];
    for v in lo..=hi {
        // Keep mu weakly decreasing; interlacing guarantees it except when
        // the previous slot chose below this row's ceiling.
        if at > 0 && v > mu[at - 1] {
            continue;
        }
        mu[at] = v;
        branch_interlacing(parts, at + 1, mu, visit);
    }
}

/// Two-row diagrams reduce to a geometric series:
/// `s_(a,b)(x,y) = x^a y^b (1 - r^{a-b+1}) / (1 - r)` with `r = y/x`.
fn log2_schur_two_rows(a: usize, b: usize, x: f64, y: f64) -> f64 {
    debug_assert!(a >= b);
    debug_assert!(x >= y && y > 0.0);
    let gap = (a - b) as f64;
    let t = (y / x).ln();
    let ratio = if t == 0.0 {
        gap + 1.0
    } else {
        ((gap + 1.0) * t).exp_m1() / t.exp_m1()
    };
    a as f64 * x.log2() + b as f64 * y.log2() + ratio.log2()
}

/// Memoized cancellation-free Schur evaluation by branching on the last
/// variable: every term in the recursion is nonnegative, so the value keeps
/// full relative accuracy even where the determinant route cancels (peaked
/// spectra with large diagrams). Shares subdiagram values across calls,
/// which makes whole-distribution evaluation cheap.
pub struct SchurEvaluator {
    xs: Vec<f64>,
    cache: std::collections::HashMap<(usize, Vec<usize>), f64>,
}

impl SchurEvaluator {
    pub fn new(p: &Spectrum) -> Self {
        SchurEvaluator {
            xs: p.support_probs().to_vec(),
            cache: std::collections::HashMap::new(),
        }
    }

    pub fn eval(&mut self, lambda: &Partition) -> f64 {
        let trimmed: Vec<usize> = lambda
            .parts()
            .iter()
            .copied()
            .filter(|&x| x > 0)
            .collect();
        if trimmed.len() > self.xs.len() {
            return 0.0;
        }
        self.eval_rec(self.xs.len(), &trimmed)
    }

    fn eval_rec(&mut self, vars: usize, parts: &[usize]) -> f64 {
        debug_assert!(parts.len() <= vars);
        if parts.is_empty() {
            return 1.0;
        }
        if vars == 1 {
            return self.xs[0].powi(parts[0] as i32);
        }
        let key = (vars, parts.to_vec());
        if let Some(&hit) = self.cache.get(&key) {
            return hit;
        }
        let weight: usize = parts.iter().sum();
        let x_last = self.xs[vars - 1];
        // Sum over subdiagrams interlacing `parts`, weighting by the last
        // variable's leftover degree.
        let mut total = 0.0;
        let mut nu = vec![0usize; parts.len().min(vars - 1)];
        self.sum_interlacing(vars, parts, weight, x_last, 0, &mut nu, &mut total);
        self.cache.insert(key, total);
        total
    }

    #[allow(clippy::too_many_arguments)]
    fn sum_interlacing(
        &mut self,
        vars: usize,
        parts: &[usize],
        weight: usize,
        x_last: f64,
        at: usize,
        nu: &mut Vec<usize>,
        total: &mut f64,
    ) {
        if at == nu.len() {
            let inner: usize = nu.iter().sum();
            let trimmed: Vec<usize> = nu.iter().copied().filter(|&x| x > 0).collect();
            let sub = self.eval_rec(vars - 1, &trimmed);
            *total += x_last.powi((weight - inner) as i32) * sub;
            return;
        }
        let hi = parts[at];
        let lo = parts.get(at + 1).copied().unwrap_or(0);
        for v in lo..=hi {
            nu[at] = v;
            self.sum_interlacing(vars, parts, weight, x_last, at + 1, nu, total);
        }
    }
}

/// Sum in the log2 domain with the usual max-extraction.
pub fn log2_sum_exp(terms: &[f64]) -> f64 {
    let m = terms.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if m == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    let sum: f64 = terms.iter().map(|t| (t - m).exp2()).sum();
    m + sum.log2()
}
