//! Bijections on `{1, …, n}`.
//!
//! The same type serves both roles the braid machinery needs: the braid
//! permutation ρ (top position → bottom position of a strand) and the strand
//! permutation π (sequence position → strand label) that indexes OU matrices.

use crate::error::{Error, Result};

/// A bijection on `{1, …, n}`, stored as its image sequence:
/// `image[i-1] = π(i)`. All labels and positions are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (1..=n).collect(),
        }
    }

    /// Builds a permutation from its image sequence, e.g. `[3, 1, 2, 4]`.
    pub fn from_image(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { image })
    }

    pub fn n(&self) -> usize {
        self.image.len()
    }

    /// π(i), with `i` in `1..=n`.
    pub fn apply(&self, i: usize) -> usize {
        self.image[i - 1]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// The composite `i ↦ next(self(i))`: `self` first, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.n(), next.n(), "permutation sizes differ");
        Permutation {
            image: self.image.iter().map(|&v| next.apply(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.n()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v - 1] = i + 1;
        }
        Permutation { image }
    }

    /// The reversal `(π(n), …, π(1))`.
    pub fn reverse(&self) -> Permutation {
        let mut image = self.image.clone();
        image.reverse();
        Permutation { image }
    }

    /// Swaps the k-th and l-th entries of the image sequence (1-based
    /// positions), i.e. composes with the transposition τ_kl on positions.
    pub fn transposed(&self, k: usize, l: usize) -> Permutation {
        assert!(
            k >= 1 && l >= 1 && k <= self.n() && l <= self.n(),
            "transposition positions out of range"
        );
        let mut image = self.image.clone();
        image.swap(k - 1, l - 1);
        Permutation { image }
    }
}

impl std::fmt::Display for Permutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for v in &self.image {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_composes_neutrally() {
        let pi = Permutation::from_image(vec![3, 1, 2, 4]).unwrap();
        let id = Permutation::identity(4);
        assert_eq!(id.then(&pi), pi);
        assert_eq!(pi.then(&id), pi);
    }

    #[test]
    fn reverse_of_identity_is_descending() {
        let id = Permutation::identity(4);
        assert_eq!(id.reverse().image(), &[4, 3, 2, 1]);
    }

    #[test]
    fn transposing_identity_at_1_3() {
        let id = Permutation::identity(4);
        assert_eq!(id.transposed(1, 3).image(), &[3, 2, 1, 4]);
    }

    #[test]
    fn inverse_roundtrip() {
        let pi = Permutation::from_image(vec![3, 1, 2, 4]).unwrap();
        assert!(pi.then(&pi.inverse()).is_identity());
        assert!(pi.inverse().then(&pi).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert_eq!(
            Permutation::from_image(vec![1, 1]),
            Err(Error::NotAPermutation(2))
        );
        assert_eq!(
            Permutation::from_image(vec![0, 1]),
            Err(Error::NotAPermutation(2))
        );
        assert_eq!(
            Permutation::from_image(vec![2, 3]),
            Err(Error::NotAPermutation(2))
        );
    }
}
