//! Independent oracles for the integration suites. Everything here is
//! deliberately brute-force and shares no code path with the library
//! implementations it checks.
//!
//! Each test target compiles its own copy, so helpers a given target does
//! not use are expected.
#![allow(dead_code)]

use num_bigint::BigUint;
use num_traits::One;
use rand::Rng;
use rand_chacha::ChaCha12Rng;
use schurcon::young::{Partition, Spectrum};

/// Hook-length dimension count: `n! / prod hooks`.
pub fn hook_length_dim(lambda: &Partition) -> BigUint {
    let rows: Vec<usize> = lambda.parts().iter().copied().filter(|&p| p > 0).collect();
    let n: usize = rows.iter().sum();
    let cols = conjugate(&rows);
    let mut numerator = factorial(n);
    let mut denominator = BigUint::one();
    for (i, &row) in rows.iter().enumerate() {
        for (j, &col) in cols.iter().take(row).enumerate() {
            let hook = (row - j) + (col - i) - 1;
            denominator *= BigUint::from(hook);
        }
    }
    numerator /= denominator;
    numerator
}

fn conjugate(rows: &[usize]) -> Vec<usize> {
    let width = rows.first().copied().unwrap_or(0);
    (0..width)
        .map(|j| rows.iter().filter(|&&r| r > j).count())
        .collect()
}

pub fn factorial(n: usize) -> BigUint {
    (2..=n).map(BigUint::from).fold(BigUint::one(), |a, b| a * b)
}

/// Schur polynomial by brute-force enumeration of semistandard fillings:
/// rows weakly increase, columns strictly increase, entries in `1..=vars`.
pub fn ssyt_schur(lambda: &Partition, xs: &[f64]) -> f64 {
    let rows: Vec<usize> = lambda.parts().iter().copied().filter(|&p| p > 0).collect();
    if rows.is_empty() {
        return 1.0;
    }
    if rows.len() > xs.len() {
        return 0.0;
    }
    let mut filling: Vec<Vec<usize>> = rows.iter().map(|&r| vec![0; r]).collect();
    let mut total = 0.0;
    fill_cell(&rows, xs, &mut filling, 0, 0, &mut total);
    total
}

fn fill_cell(
    rows: &[usize],
    xs: &[f64],
    filling: &mut Vec<Vec<usize>>,
    row: usize,
    col: usize,
    total: &mut f64,
) {
    if row == rows.len() {
        let weight: f64 = filling
            .iter()
            .flatten()
            .map(|&entry| xs[entry - 1])
            .product();
        *total += weight;
        return;
    }
    let (next_row, next_col) = if col + 1 < rows[row] {
        (row, col + 1)
    } else {
        (row + 1, 0)
    };
    let min_left = if col > 0 { filling[row][col - 1] } else { 1 };
    let min_above = if row > 0 { filling[row - 1][col] + 1 } else { 1 };
    for entry in min_left.max(min_above)..=xs.len() {
        filling[row][col] = entry;
        fill_cell(rows, xs, filling, next_row, next_col, total);
    }
    filling[row][col] = 0;
}

/// Partitions of `n` into at most `d` parts by odometer over weakly
/// decreasing tuples (independent of the library's recursive enumerator).
pub fn brute_force_partitions(n: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut tuple = vec![0usize; d];
    loop {
        let sum: usize = tuple.iter().sum();
        let sorted = tuple.windows(2).all(|w| w[0] >= w[1]);
        if sum == n && sorted {
            out.push(tuple.clone());
        }
        // Odometer step over [0, n]^d.
        let mut k = d;
        loop {
            if k == 0 {
                out.sort_by(|a, b| b.cmp(a));
                return out;
            }
            k -= 1;
            if tuple[k] < n {
                tuple[k] += 1;
                for v in &mut tuple[k + 1..] {
                    *v = 0;
                }
                break;
            }
        }
    }
}

/// Seeded random spectrum: uniform on the simplex, sorted by construction.
pub fn random_spectrum(d: usize, rng: &mut ChaCha12Rng) -> Spectrum {
    let raw: Vec<f64> = (0..d).map(|_| -rng.random::<f64>().ln()).collect();
    Spectrum::normalized(raw).expect("positive entries")
}

pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("test partitions are sorted")
}

pub fn spec(ps: &[f64]) -> Spectrum {
    Spectrum::new(ps.to_vec()).expect("test spectra are valid")
}
