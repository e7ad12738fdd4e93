//! Irrep dimensions attached to a Young diagram: the symmetric-group factor
//! `dim V` and the unitary-group factor `dim U`, in exact integer arithmetic.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::young::Partition;

/// Largest `d` accepted by the signed-multinomial route (d! terms).
pub const SIGNED_DIM_MAX_D: usize = 8;

fn factorial(n: usize) -> BigUint {
    let mut acc = BigUint::one();
    for k in 2..=n {
        acc *= BigUint::from(k);
    }
    acc
}

/// First-row-shifted lengths `l_i = lambda_i + d - 1 - i` (0-indexed rows).
fn shifted_lengths(lambda: &Partition, d: usize) -> Vec<usize> {
    (0..d).map(|i| lambda.part(i) + d - 1 - i).collect()
}

/// The staircase `(d-1, d-2, ..., 0)` that shifts diagrams in the signed
/// multinomial formula.
pub fn staircase(d: usize) -> Vec<usize> {
    (0..d).map(|i| d - 1 - i).collect()
}

/// Symmetric-group irrep dimension of the diagram, via the ratio of
/// factorials over the shifted row lengths:
/// `n! * prod_{i<j}(l_i - l_j) / prod_i l_i!`.
pub fn dim_sn_irrep(lambda: &Partition, d: usize) -> Result<BigUint> {
    let lambda = lambda.padded(d)?;
    let n = lambda.weight();
    let ls = shifted_lengths(&lambda, d);
    let mut num = factorial(n);
    for i in 0..d {
        for j in (i + 1)..d {
            num *= BigUint::from(ls[i] - ls[j]);
        }
    }
    let mut den = BigUint::one();
    for &l in &ls {
        den *= factorial(l);
    }
    Ok(num / den)
}

/// Multinomial coefficient `n! / prod m_i!` of a composition, zero when any
/// entry is negative.
fn signed_multinomial(entries: &[i64]) -> BigUint {
    if entries.iter().any(|&m| m < 0) {
        return BigUint::zero();
    }
    let n: i64 = entries.iter().sum();
    let mut acc = factorial(n as usize);
    for &m in entries {
        acc /= factorial(m as usize);
    }
    acc
}

/// Same value as [`dim_sn_irrep`], computed as the alternating sum of
/// multinomial coefficients over the staircase-shifted compositions:
/// `sum_g sgn(g) C(lambda + delta - g(delta))` with `delta = (d-1, ..., 0)`.
pub fn dim_sn_irrep_signed(lambda: &Partition, d: usize) -> Result<BigUint> {
    if d > SIGNED_DIM_MAX_D {
        return Err(Error::guard(format!(
            "signed dimension formula sums d! terms; d = {d} exceeds {SIGNED_DIM_MAX_D}"
        )));
    }
    let lambda = lambda.padded(d)?;
    let staircase: Vec<i64> = staircase(d).into_iter().map(|x| x as i64).collect();

    let mut total = BigInt::zero();
    let mut perm: Vec<usize> = (0..d).collect();
    permute_with_sign(&mut perm, 0, 1, &mut |perm, sign| {
        let entries: Vec<i64> = (0..d)
            .map(|i| lambda.part(i) as i64 + staircase[i] - staircase[perm[i]])
            .collect();
        let term = BigInt::from(signed_multinomial(&entries));
        if sign > 0 {
            total += term;
        } else {
            total -= term;
        }
    });
    if total.is_negative() {
        return Err(Error::input(format!(
            "signed dimension sum went negative for {lambda}"
        )));
    }
    Ok(total.to_biguint().expect("nonnegative"))
}

/// Visits all permutations of `perm[at..]` carrying the signature along.
fn permute_with_sign(
    perm: &mut Vec<usize>,
    at: usize,
    sign: i32,
    visit: &mut impl FnMut(&[usize], i32),
) {
    if at == perm.len() {
        visit(perm, sign);
        return;
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        let s = if i == at { sign } else { -sign };
        permute_with_sign(perm, at + 1, s, visit);
        perm.swap(at, i);
    }
}

/// Unitary-group irrep dimension: `prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i)`.
pub fn dim_su_irrep(lambda: &Partition, d: usize) -> Result<BigUint> {
    let lambda = lambda.padded(d)?;
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..d {
        for j in (i + 1)..d {
            num *= BigUint::from(lambda.part(i) - lambda.part(j) + j - i);
            den *= BigUint::from(j - i);
        }
    }
    Ok(num / den)
}

/// `ln dim V` via log-gamma, usable far beyond big-integer comfort.
pub fn ln_dim_sn_irrep(lambda: &Partition, d: usize) -> Result<f64> {
    let lambda = lambda.padded(d)?;
    let n = lambda.weight();
    let ls = shifted_lengths(&lambda, d);
    let mut acc = ln_factorial(n);
    for i in 0..d {
        for j in (i + 1)..d {
            acc += ((ls[i] - ls[j]) as f64).ln();
        }
    }
    for &l in &ls {
        acc -= ln_factorial(l);
    }
    Ok(acc)
}

pub(crate) fn ln_factorial(n: usize) -> f64 {
    statrs::function::gamma::ln_gamma(n as f64 + 1.0)
}
