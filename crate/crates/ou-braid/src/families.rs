//! Generators for the braid families used throughout: weaving braids,
//! fundamental braids and their powers, positive permutation braids, and
//! seeded random words for property checks.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::perm::Permutation;
use crate::word::BraidWord;

/// B_W(p, q): q repetitions of the alternating block σ1 σ2^{-1} σ3 …
/// σ_{p-1}^{(-1)^p}.
pub fn weaving(p: usize, q: usize) -> Result<BraidWord> {
    if p < 2 {
        return Err(Error::BadParameter("weaving needs p >= 2".to_string()));
    }
    if q < 1 {
        return Err(Error::BadParameter("weaving needs q >= 1".to_string()));
    }
    let block: Vec<i32> = (1..p as i32)
        .map(|i| if i % 2 == 1 { i } else { -i })
        .collect();
    let mut letters = Vec::with_capacity(block.len() * q);
    for _ in 0..q {
        letters.extend_from_slice(&block);
    }
    BraidWord::new(p, letters)
}

/// The closed-form OU matrix of B_W(p, p), p odd, under the order
/// (1, 3, …, p, 2, 4, …, p-1): entry (i, j) is 2 when i > j with
/// (p+1)/2 ≤ i-j ≤ p-1, or i < j with 1 ≤ j-i ≤ (p-1)/2, else 0.
pub fn weaving_ou_pattern(p: usize) -> Result<IntMatrix> {
    if p < 3 || p % 2 == 0 {
        return Err(Error::BadParameter(
            "the weaving pattern needs odd p >= 3".to_string(),
        ));
    }
    Ok(IntMatrix::from_fn(p, |i0, j0| {
        let (i, j) = (i0 + 1, j0 + 1);
        let two = (i > j && (p + 1) / 2 <= i - j && i - j <= p - 1)
            || (i < j && 1 <= j - i && j - i <= (p - 1) / 2);
        if two {
            BigInt::from(2)
        } else {
            BigInt::from(0)
        }
    }))
}

/// The order (1, 3, 5, …, 2, 4, …): odd labels ascending, then even.
pub fn interleaved_order(n: usize) -> Permutation {
    let mut image: Vec<usize> = (1..=n).step_by(2).collect();
    image.extend((2..=n).step_by(2));
    Permutation::from_image(image).expect("odds then evens is a permutation")
}

/// The fundamental braid Δ on n strands, realized as the staircase word
/// (σ1)(σ2σ1)…(σ_{n-1}…σ1); each pair of strands crosses exactly once.
pub fn fundamental(n: usize) -> Result<BraidWord> {
    if n < 1 {
        return Err(Error::InvalidStrandCount);
    }
    let mut letters = Vec::with_capacity(n * (n - 1) / 2);
    for k in 1..n {
        for i in (1..=k).rev() {
            letters.push(i as i32);
        }
    }
    BraidWord::new(n, letters)
}

/// Δ^r: the r-fold product of the fundamental braid word.
pub fn delta_power(n: usize, r: usize) -> Result<BraidWord> {
    let delta = fundamental(n)?;
    let mut letters = Vec::with_capacity(delta.len() * r);
    for _ in 0..r {
        letters.extend_from_slice(delta.letters());
    }
    BraidWord::new(n, letters)
}

/// The positive permutation braid realizing braid permutation ρ: the
/// bubble-sort reduced word, so each strand pair crosses at most once.
pub fn permutation_braid(rho: &Permutation) -> BraidWord {
    let n = rho.n();
    let mut arrangement: Vec<usize> = (1..=n).collect();
    let mut letters = Vec::new();
    loop {
        let mut swapped = false;
        for p in 0..n.saturating_sub(1) {
            if rho.apply(arrangement[p]) > rho.apply(arrangement[p + 1]) {
                arrangement.swap(p, p + 1);
                letters.push((p + 1) as i32);
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    BraidWord::new(n, letters).expect("bubble-sort letters are in range")
}

fn random_letters(n: usize, len: usize, seed: u64, signed: bool) -> Result<BraidWord> {
    if n < 2 {
        return Err(Error::BadParameter(
            "random words need at least 2 strands".to_string(),
        ));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let letters = (0..len)
        .map(|_| {
            let g = rng.random_range(1..n) as i32;
            if signed && rng.random_bool(0.5) {
                -g
            } else {
                g
            }
        })
        .collect();
    BraidWord::new(n, letters)
}

/// Uniform i.i.d. signed letters, deterministic per seed.
pub fn random_braid(n: usize, len: usize, seed: u64) -> Result<BraidWord> {
    random_letters(n, len, seed, true)
}

/// Uniform i.i.d. positive letters, deterministic per seed.
pub fn random_positive(n: usize, len: usize, seed: u64) -> Result<BraidWord> {
    random_letters(n, len, seed, false)
}

/// A random positive word completed to a pure braid: the inverse
/// permutation braid is appended, so the braid permutation is the identity
/// and the word stays positive.
pub fn random_positive_pure(n: usize, len: usize, seed: u64) -> Result<BraidWord> {
    let prefix = random_positive(n, len, seed)?;
    let completion = permutation_braid(&prefix.braid_permutation().inverse());
    prefix.product(&completion)
}

/// A uniformly random permutation, deterministic per seed.
pub fn random_permutation(n: usize, seed: u64) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut image: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        let j = rng.random_range(0..=i);
        image.swap(i, j);
    }
    Permutation::from_image(image).expect("shuffle preserves bijectivity")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::warping;

    #[test]
    fn weaving_blocks_alternate_signs() {
        assert_eq!(weaving(3, 1).unwrap().letters(), &[1, -2]);
        assert_eq!(weaving(2, 3).unwrap().letters(), &[1, 1, 1]);
        assert_eq!(weaving(4, 2).unwrap().letters(), &[1, -2, 3, 1, -2, 3]);
        assert!(weaving(1, 1).is_err());
        assert!(weaving(3, 0).is_err());
    }

    #[test]
    fn weaving_pattern_matches_simulation_for_odd_p() {
        let expected_p3 =
            IntMatrix::from_i64_rows(vec![vec![0, 2, 0], vec![0, 0, 2], vec![2, 0, 0]]).unwrap();
        assert_eq!(weaving_ou_pattern(3).unwrap(), expected_p3);
        for p in [3usize, 5, 7, 9] {
            let simulated = weaving(p, p)
                .unwrap()
                .ou_matrix(&interleaved_order(p))
                .unwrap();
            assert_eq!(weaving_ou_pattern(p).unwrap(), simulated, "p = {p}");
        }
        assert!(weaving_ou_pattern(4).is_err());
    }

    #[test]
    fn odd_weaving_pairs_cross_twice_under_the_same_strand() {
        for p in [3usize, 5, 7] {
            let counts = weaving(p, p).unwrap().over_counts();
            for a in 0..p {
                for b in 0..a {
                    assert_eq!(counts[a][b] + counts[b][a], 2);
                    assert_eq!(counts[a][b].min(counts[b][a]), 0);
                }
            }
        }
    }

    #[test]
    fn odd_weaving_under_set_splits_zeros_and_twos() {
        for p in [3usize, 5, 7] {
            let b = weaving(p, p).unwrap();
            let mut expected = vec![0u64; (p + 1) / 2];
            expected.extend(std::iter::repeat(2).take((p - 1) / 2));
            for row in crate::invariants::under_set(&b).rows() {
                assert_eq!(row, &expected);
            }
        }
    }

    #[test]
    fn weaving_pattern_rows_sum_to_p_minus_one() {
        for p in [3usize, 5, 7, 9, 11] {
            let pattern = weaving_ou_pattern(p).unwrap();
            for i in 0..p {
                let row_sum: BigInt = (0..p).map(|j| pattern.entry(i, j)).sum();
                assert_eq!(row_sum, BigInt::from(p as i64 - 1));
            }
        }
    }

    #[test]
    fn fundamental_braid_crosses_every_pair_once() {
        for n in 1..=7 {
            let delta = fundamental(n).unwrap();
            let counts = delta.over_counts();
            for a in 0..n {
                for b in 0..a {
                    assert_eq!(counts[a][b] + counts[b][a], 1, "pair ({b}, {a}) at n={n}");
                }
            }
            assert_eq!(delta.len(), n * (n - 1) / 2);
        }
    }

    #[test]
    fn fundamental_braid_reverses_the_strands() {
        let delta = fundamental(4).unwrap();
        assert_eq!(delta.braid_permutation().image(), &[4, 3, 2, 1]);
        assert!(delta_power(4, 2).unwrap().braid_permutation().is_identity());
        assert_eq!(
            delta_power(4, 3).unwrap().braid_permutation().image(),
            &[4, 3, 2, 1]
        );
    }

    #[test]
    fn delta_power_zero_is_empty() {
        let b = delta_power(5, 0).unwrap();
        assert!(b.is_empty());
        assert_eq!(b.n(), 5);
        assert!(fundamental(1).unwrap().is_empty());
    }

    #[test]
    fn permutation_braid_realizes_its_permutation() {
        assert!(permutation_braid(&Permutation::identity(4)).is_empty());
        let longest = Permutation::from_image(vec![4, 3, 2, 1]).unwrap();
        let w = permutation_braid(&longest);
        assert_eq!(w.len(), 6);
        assert_eq!(w.braid_permutation(), longest);
        for seed in 0..20 {
            let rho = random_permutation(5, seed);
            let w = permutation_braid(&rho);
            assert_eq!(w.braid_permutation(), rho);
            let counts = w.over_counts();
            for a in 0..5 {
                for b in 0..a {
                    assert!(counts[a][b] + counts[b][a] <= 1);
                }
            }
        }
    }

    #[test]
    fn permutation_braids_are_completely_layered() {
        for seed in 0..10 {
            let rho = random_permutation(5, seed);
            let w = permutation_braid(&rho);
            assert_eq!(warping::wd_exact(&w, None).value, 0);
        }
    }

    #[test]
    fn random_words_are_deterministic_and_sized() {
        let a = random_braid(4, 9, 7).unwrap();
        let b = random_braid(4, 9, 7).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 9);
        assert_ne!(a, random_braid(4, 9, 8).unwrap());
        assert!(random_positive(3, 5, 0).unwrap().is_positive());
        assert!(random_braid(3, 0, 0).unwrap().is_empty());
        assert!(random_braid(1, 3, 0).is_err());
    }

    #[test]
    fn random_pure_braids_are_pure_and_positive() {
        for seed in 0..10 {
            let b = random_positive_pure(4, 6, seed).unwrap();
            assert!(b.is_positive());
            assert!(b.braid_permutation().is_identity());
        }
    }
}
