//! Braid-level invariants read off the OU matrix.
//!
//! Rank, determinant, characteristic polynomial, and the over-/under-
//! crossing multisets are independent of the strand permutation; for
//! positive braids they do not depend on the chosen diagram either, which
//! `random_rewrite` exercises by walking the rewriting graph.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::{CharPoly, IntMatrix};
use crate::perm::Permutation;
use crate::warping::WdResult;
use crate::word::{BraidMove, BraidWord};

/// A multiset of n multisets of crossing counts, canonicalized so equality
/// is plain sequence equality: inner lists sorted ascending, outer list
/// sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingMultiset {
    rows: Vec<Vec<u64>>,
}

impl CrossingMultiset {
    fn canonicalize(mut rows: Vec<Vec<u64>>) -> Self {
        for row in &mut rows {
            row.sort_unstable();
        }
        rows.sort();
        CrossingMultiset { rows }
    }

    pub(crate) fn of_matrix_rows(m: &IntMatrix) -> Self {
        Self::canonicalize(collect_u64(m, false))
    }

    pub(crate) fn of_matrix_columns(m: &IntMatrix) -> Self {
        Self::canonicalize(collect_u64(m, true))
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }
}

fn collect_u64(m: &IntMatrix, transposed: bool) -> Vec<Vec<u64>> {
    use num_traits::ToPrimitive;
    (0..m.n())
        .map(|i| {
            (0..m.n())
                .map(|j| {
                    let e = if transposed { m.entry(j, i) } else { m.entry(i, j) };
                    e.to_u64().expect("OU entries are crossing counts")
                })
                .collect()
        })
        .collect()
}

fn ou_at_identity(word: &BraidWord) -> IntMatrix {
    word.ou_matrix(&Permutation::identity(word.n()))
        .expect("identity always fits")
}

/// det(B): the determinant of the OU matrix (any strand permutation gives
/// the same value).
pub fn det_of(word: &BraidWord) -> BigInt {
    ou_at_identity(word).det()
}

/// rank(B).
pub fn rank_of(word: &BraidWord) -> usize {
    ou_at_identity(word).rank()
}

/// The characteristic polynomial of the OU matrix.
pub fn charpoly_of(word: &BraidWord) -> CharPoly {
    ou_at_identity(word).charpoly()
}

/// O(B): the multiset of OU-matrix rows.
pub fn over_set(word: &BraidWord) -> CrossingMultiset {
    CrossingMultiset::of_matrix_rows(&ou_at_identity(word))
}

/// U(B): the multiset of OU-matrix columns.
pub fn under_set(word: &BraidWord) -> CrossingMultiset {
    CrossingMultiset::of_matrix_columns(&ou_at_identity(word))
}

/// Applies `moves` uniformly random applicable rewriting moves
/// (far-commutation or type-III, at any site) to a positive word; seeded,
/// so deterministic. Length and braid permutation are preserved.
pub fn random_rewrite(word: &BraidWord, moves: usize, seed: u64) -> Result<BraidWord> {
    if !word.is_positive() {
        return Err(Error::NotPositive);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = word.clone();
    for _ in 0..moves {
        let letters = current.letters();
        let mut sites = Vec::new();
        for p in 0..letters.len().saturating_sub(1) {
            if (letters[p] - letters[p + 1]).abs() != 1 {
                sites.push((BraidMove::FarCommutation, p));
            }
        }
        for p in 0..letters.len().saturating_sub(2) {
            if letters[p] == letters[p + 2] && (letters[p] - letters[p + 1]).abs() == 1 {
                sites.push((BraidMove::TypeIii, p));
            }
        }
        if sites.is_empty() {
            break;
        }
        let (kind, position) = sites[rng.random_range(0..sites.len())];
        current = current
            .apply_braid_move(kind, position)
            .expect("enumerated sites are applicable");
    }
    Ok(current)
}

/// Everything the library knows about one word, bundled for reporting.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvariantReport {
    pub n: usize,
    pub word: String,
    pub rho: Permutation,
    pub ou: IntMatrix,
    pub det: BigInt,
    pub rank: usize,
    pub charpoly: CharPoly,
    pub over: CrossingMultiset,
    pub under: CrossingMultiset,
    pub wd: Option<WdResult>,
}

pub fn invariant_report(word: &BraidWord, wd: Option<WdResult>) -> InvariantReport {
    let ou = ou_at_identity(word);
    InvariantReport {
        n: word.n(),
        word: word.format(),
        rho: word.braid_permutation(),
        det: ou.det(),
        rank: ou.rank(),
        charpoly: ou.charpoly(),
        over: CrossingMultiset::of_matrix_rows(&ou),
        under: CrossingMultiset::of_matrix_columns(&ou),
        ou,
        wd,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn word(text: &str, n: Option<usize>) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn det_and_rank_of_positive_example() {
        let b = word("1 2^4 1 2", Some(3));
        assert_eq!(det_of(&b), BigInt::from(2));
        assert_eq!(rank_of(&b), 3);
    }

    #[test]
    fn permutation_braids_have_zero_determinant() {
        for seed in 0..10 {
            let rho = families::random_permutation(5, seed);
            let b = families::permutation_braid(&rho);
            assert_eq!(det_of(&b), BigInt::from(0));
            let m = ou_at_identity(&b);
            assert!(m.is_strict_lower_triangular());
        }
    }

    #[test]
    fn empty_word_has_trivial_invariants() {
        let b = word("", Some(3));
        assert_eq!(det_of(&b), BigInt::from(0));
        assert_eq!(rank_of(&b), 0);
        assert_eq!(over_set(&b), under_set(&b));
        assert_eq!(over_set(&word("", Some(2))).rows(), &[vec![0, 0], vec![0, 0]]);
    }

    #[test]
    fn fundamental_rank_is_n_minus_one() {
        for n in 2..=6 {
            assert_eq!(rank_of(&families::fundamental(n).unwrap()), n - 1);
        }
    }

    #[test]
    fn crossing_sets_of_positive_example() {
        let b = word("1 2^4 1 2", Some(3));
        assert_eq!(
            over_set(&b).rows(),
            &[vec![0, 0, 1], vec![0, 1, 2], vec![0, 1, 2]]
        );
        assert_eq!(
            under_set(&b).rows(),
            &[vec![0, 0, 2], vec![0, 1, 1], vec![0, 1, 2]]
        );
    }

    #[test]
    fn crossing_sets_of_a_four_strand_reference_matrix() {
        let m = IntMatrix::from_i64_rows(vec![
            vec![0, 1, 0, 0],
            vec![2, 0, 0, 1],
            vec![0, 2, 0, 1],
            vec![0, 1, 0, 0],
        ])
        .unwrap();
        assert_eq!(
            CrossingMultiset::of_matrix_rows(&m).rows(),
            &[
                vec![0, 0, 0, 1],
                vec![0, 0, 0, 1],
                vec![0, 0, 1, 2],
                vec![0, 0, 1, 2]
            ]
        );
        assert_eq!(
            CrossingMultiset::of_matrix_columns(&m).rows(),
            &[
                vec![0, 0, 0, 0],
                vec![0, 0, 0, 2],
                vec![0, 0, 1, 1],
                vec![0, 1, 1, 2]
            ]
        );
    }

    #[test]
    fn rewrite_with_zero_moves_is_identity() {
        let b = word("1 2 1 3", Some(4));
        assert_eq!(random_rewrite(&b, 0, 0).unwrap(), b);
        assert_eq!(
            random_rewrite(&word("-1", Some(2)), 1, 0),
            Err(Error::NotPositive)
        );
    }

    #[test]
    fn rewrite_applies_the_only_available_move() {
        let b = word("1 2 1", Some(3));
        let rewritten = random_rewrite(&b, 1, 123).unwrap();
        assert_eq!(rewritten.letters(), &[2, 1, 2]);
    }

    #[test]
    fn rewrite_preserves_length_and_permutation() {
        for seed in 0..10 {
            let b = families::random_positive(5, 12, seed).unwrap();
            let rewritten = random_rewrite(&b, 30, seed).unwrap();
            assert_eq!(rewritten.len(), b.len());
            assert_eq!(rewritten.braid_permutation(), b.braid_permutation());
        }
    }

    #[test]
    fn report_bundles_consistent_values() {
        let b = word("1 2^4 1 2", Some(3));
        let report = invariant_report(&b, None);
        assert_eq!(report.n, 3);
        assert_eq!(report.word, "1 2 2 2 2 1 2");
        assert_eq!(report.det, BigInt::from(2));
        assert_eq!(report.rank, 3);
        assert_eq!(report.ou.trace(), BigInt::from(0));
        let n = report.n as u32;
        let sign = if n % 2 == 0 { 1 } else { -1 };
        assert_eq!(
            report.det,
            BigInt::from(sign) * report.charpoly.constant_term()
        );
        assert!(report.wd.is_none());

        let delta = families::fundamental(4).unwrap();
        let dr = invariant_report(&delta, None);
        assert_eq!(dr.rho.image(), &[4, 3, 2, 1]);
        assert_eq!(dr.det, BigInt::from(0));
        assert_eq!(dr.rank, 3);

        let er = invariant_report(&word("", Some(3)), None);
        assert_eq!(er.det, BigInt::from(0));
        assert!(er.ou.is_zero());
    }
}
