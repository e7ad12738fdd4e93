use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A Young diagram: a weakly decreasing tuple of nonnegative row lengths.
///
/// Partitions label both measurement outcomes (padded to the local dimension
/// `d`, trailing zeros explicit) and symmetric-group cycle types (no padding).
/// The parts vector is stored exactly as constructed, so `(3, 1)` and
/// `(3, 1, 0)` are distinct values describing the same diagram; use
/// [`Partition::padded`] to canonicalize.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, rejecting part vectors that are not weakly
    /// decreasing.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::input(format!(
                "partition parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Sum of the parts (the weight `n`).
    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn rows(&self) -> usize {
        self.parts.iter().filter(|&&p| p > 0).count()
    }

    /// Row length at `i`, zero beyond the stored parts.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Length of the stored parts vector, including explicit zeros.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Canonical form with exactly `d` entries. Fails if the diagram has more
    /// than `d` nonzero rows.
    pub fn padded(&self, d: usize) -> Result<Self> {
        if self.rows() > d {
            return Err(Error::input(format!(
                "partition {self} has {} rows, more than d = {d}",
                self.rows()
            )));
        }
        let mut parts: Vec<usize> = self.parts.iter().copied().filter(|&p| p > 0).collect();
        parts.resize(d, 0);
        Ok(Partition { parts })
    }

    /// The conjugate (transposed) diagram, with no trailing zeros.
    pub fn conjugate(&self) -> Self {
        let mut parts = Vec::new();
        let mut row = 0;
        loop {
            let count = self.parts.iter().filter(|&&p| p > row).count();
            if count == 0 {
                break;
            }
            parts.push(count);
            row += 1;
        }
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Number of partitions of `n` into at most `d` parts, saturating at the cap.
///
/// Used as the enumeration guard; `cap` keeps the recurrence table in u64.
pub fn partition_count_capped(n: usize, d: usize, cap: u64) -> u64 {
    // p(n, k) = partitions of n into parts of size <= k equals partitions
    // into at most k parts (conjugation).
    let mut table = vec![0u64; n + 1];
    table[0] = 1;
    for part in 1..=d.min(n.max(1)) {
        for m in part..=n {
            table[m] = (table[m] + table[m - part]).min(cap);
        }
    }
    table[n]
}

/// All partitions of `n` with at most `d` parts, padded to `d` entries, in
/// descending lexicographic order.
pub fn enumerate_partitions(n: usize, d: usize) -> Result<Vec<Partition>> {
    if d == 0 {
        if n == 0 {
            return Ok(vec![Partition { parts: vec![] }]);
        }
        return Err(Error::input(format!(
            "no partitions of {n} into zero parts"
        )));
    }
    let mut out = Vec::new();
    let mut prefix = Vec::with_capacity(d);
    descend(n, n, d, &mut prefix, &mut out);
    Ok(out)
}

fn descend(
    remaining: usize,
    max_part: usize,
    slots: usize,
    prefix: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if remaining == 0 {
        let mut parts = prefix.clone();
        parts.resize(parts.len() + slots, 0);
        out.push(Partition { parts });
        return;
    }
    if slots == 0 {
        return;
    }
    // Largest first part first gives descending lexicographic output.
    let lo = remaining.div_ceil(slots);
    let hi = max_part.min(remaining);
    for part in (lo..=hi).rev() {
        prefix.push(part);
        descend(remaining - part, part, slots - 1, prefix, out);
        prefix.pop();
    }
}
