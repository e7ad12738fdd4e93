//! Symmetric-group irreducible characters by recursive rim-hook removal,
//! in the first-column hook (beta-set) encoding: removing a rim hook of
//! length `k` moves one beta entry down by `k`; the sign counts the entries
//! it jumps over.

use crate::error::{Error, Result};
use crate::young::Partition;

/// Weight cap: the projector path only needs characters for small `n`.
pub const CHARACTER_MAX_N: usize = 8;

/// Irreducible character of the diagram `lambda` at the conjugacy class
/// `cycle_type`; both must be partitions of the same `n <= 8`.
pub fn sn_character(lambda: &Partition, cycle_type: &Partition) -> Result<i64> {
    let n = lambda.weight();
    if cycle_type.weight() != n {
        return Err(Error::input(format!(
            "cycle type {cycle_type} does not match the weight of {lambda}"
        )));
    }
    if n > CHARACTER_MAX_N {
        return Err(Error::guard(format!(
            "characters supported up to n = {CHARACTER_MAX_N}, got {n}"
        )));
    }
    let rows: Vec<usize> = lambda.parts().iter().copied().filter(|&p| p > 0).collect();
    let len = rows.len();
    let beta: Vec<usize> = rows
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (len - 1 - i))
        .collect();
    let cycles: Vec<usize> = cycle_type
        .parts()
        .iter()
        .copied()
        .filter(|&c| c > 0)
        .collect();
    Ok(strip_all(&beta, &cycles))
}

fn strip_all(beta: &[usize], cycles: &[usize]) -> i64 {
    let Some((&k, rest)) = cycles.split_first() else {
        return 1;
    };
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beta.contains(&target) {
            continue;
        }
        let crossings = beta.iter().filter(|&&c| c > target && c < b).count();
        let sign = if crossings % 2 == 0 { 1 } else { -1 };
        let mut next: Vec<usize> = beta.to_vec();
        next[i] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += sign * strip_all(&next, rest);
    }
    total
}

#[cfg(test)]
mod tests {
    use num_traits::ToPrimitive;

    use super::*;
    use crate::young::{dim_sn_irrep, enumerate_partitions};

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn trivial_rep_is_constant_one() {
        for n in 1..=6 {
            for class in enumerate_partitions(n, n).unwrap() {
                assert_eq!(sn_character(&part(&[n]), &class).unwrap(), 1);
            }
        }
    }

    #[test]
    fn sign_rep_on_a_transposition() {
        assert_eq!(sn_character(&part(&[1, 1]), &part(&[2])).unwrap(), -1);
    }

    #[test]
    fn mixed_rep_on_a_three_cycle() {
        assert_eq!(sn_character(&part(&[2, 1]), &part(&[3])).unwrap(), -1);
    }

    #[test]
    fn identity_class_gives_dimension() {
        for n in 1..=8usize {
            let id = part(&vec![1; n]);
            for lambda in enumerate_partitions(n, n).unwrap() {
                let chi = sn_character(&lambda, &id).unwrap();
                let dim = dim_sn_irrep(&lambda, n).unwrap().to_i64().unwrap();
                assert_eq!(chi, dim, "{lambda}");
            }
        }
    }

    #[test]
    fn column_orthogonality_at_the_identity() {
        // sum over lambda of chi(id) * chi(class) = 0 for any nonidentity
        // class; with chi(id) = dim this is the regular-character identity.
        let n = 5;
        let id = part(&[1, 1, 1, 1, 1]);
        for class in enumerate_partitions(n, n).unwrap() {
            if class == id {
                continue;
            }
            let total: i64 = enumerate_partitions(n, n)
                .unwrap()
                .iter()
                .map(|lam| {
                    sn_character(lam, &id).unwrap() * sn_character(lam, &class).unwrap()
                })
                .sum();
            assert_eq!(total, 0, "class {class}");
        }
    }

    #[test]
    fn mismatched_weights_rejected() {
        assert!(sn_character(&part(&[2, 1]), &part(&[2])).is_err());
        assert!(sn_character(&part(&[9]), &part(&[9])).is_err());
    }
}
