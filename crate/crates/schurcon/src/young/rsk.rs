//! Insertion-tableau shapes of random words: a Monte-Carlo oracle for the
//! block-measurement distribution (the shape of an i.i.d. word is distributed
//! exactly as the measurement outcome).

use rand::Rng;

use crate::error::{Error, Result};
use crate::young::{Partition, Spectrum};

/// Shape of the row-insertion tableau of `word` over the alphabet `1..=d`,
/// padded to `d` rows.
///
/// Rows stay weakly increasing, so each insertion is a binary search for the
/// leftmost strictly larger entry; bumps cascade at most `d` rows deep.
pub fn rsk_shape(word: &[usize], d: usize) -> Result<Partition> {
    if word.is_empty() {
        return Err(Error::input("word must be nonempty"));
    }
    if let Some(&bad) = word.iter().find(|&&x| x < 1 || x > d) {
        return Err(Error::input(format!(
            "letter {bad} outside alphabet 1..={d}"
        )));
    }
    let mut rows: Vec<Vec<usize>> = Vec::new();
    for &letter in word {
        let mut x = letter;
        let mut r = 0;
        loop {
            if r == rows.len() {
                rows.push(vec![x]);
                break;
            }
            let row = &mut rows[r];
            let at = row.partition_point(|&y| y <= x);
            if at == row.len() {
                row.push(x);
                break;
            }
            std::mem::swap(&mut row[at], &mut x);
            r += 1;
        }
    }
    let mut parts: Vec<usize> = rows.iter().map(|r| r.len()).collect();
    parts.resize(parts.len().max(d), 0);
    Partition::new(parts)?.padded(d)
}

/// Draws an i.i.d. word of length `n` from the spectrum and returns its
/// insertion shape. The induced shape law equals the outcome distribution.
pub fn sample_shape<R: Rng + ?Sized>(p: &Spectrum, n: usize, rng: &mut R) -> Result<Partition> {
    if n == 0 {
        return Err(Error::input("need at least one copy to sample"));
    }
    let cdf: Vec<f64> = p
        .probs()
        .iter()
        .scan(0.0, |acc, &q| {
            *acc += q;
            Some(*acc)
        })
        .collect();
    let d = p.dim();
    let word: Vec<usize> = (0..n)
        .map(|_| {
            let u: f64 = rng.random();
            let k = cdf.partition_point(|&c| c < u);
            k.min(d - 1) + 1
        })
        .collect();
    rsk_shape(&word, d)
}
