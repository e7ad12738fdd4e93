use itertools::Itertools;

use crate::error::{Error, Result};
use crate::young::Partition;

/// A permutation of `n` tensor-factor positions, stored as images:
/// `sigma(k) = images[k]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::input(format!("not a permutation: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    /// Swaps positions `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Result<Self> {
        if i >= n || j >= n {
            return Err(Error::input(format!(
                "transposition ({i} {j}) outside 0..{n}"
            )));
        }
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(i, j);
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn image(&self, k: usize) -> usize {
        self.images[k]
    }

    /// Function composition: `(self * other)(k) = self(other(k))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: (0..self.len()).map(|k| self.images[other.images[k]]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[v] = k;
        }
        Permutation { images }
    }

    /// Cycle lengths as a partition of `n`, descending.
    pub fn cycle_type(&self) -> Partition {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = self.images[k];
                len += 1;
            }
            cycles.push(len);
        }
        cycles.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(cycles).expect("sorted descending")
    }

    /// All of `S_n` in lexicographic image order.
    pub fn all(n: usize) -> Vec<Permutation> {
        (0..n)
            .permutations(n)
            .map(|images| Permutation { images })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_and_inverse() {
        let s = Permutation::from_images(vec![1, 2, 0]).unwrap();
        let t = Permutation::from_images(vec![0, 2, 1]).unwrap();
        let st = s.compose(&t);
        for k in 0..3 {
            assert_eq!(st.image(k), s.image(t.image(k)));
        }
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
    }

    #[test]
    fn cycle_types() {
        assert_eq!(
            Permutation::identity(4).cycle_type().parts(),
            &[1, 1, 1, 1]
        );
        assert_eq!(
            Permutation::from_images(vec![1, 2, 0, 3])
                .unwrap()
                .cycle_type()
                .parts(),
            &[3, 1]
        );
        assert_eq!(
            Permutation::transposition(2, 0, 1).unwrap().cycle_type().parts(),
            &[2]
        );
    }

    #[test]
    fn group_order() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }
}
