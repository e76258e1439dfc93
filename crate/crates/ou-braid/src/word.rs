//! Braid words and diagram simulation.
//!
//! A braid diagram on `n` strands is encoded as a word in the Artin
//! generators: letter `+i` stands for σ_i, letter `-i` for σ_i^{-1}.
//! Strands are labeled `s_1, …, s_n` by their position at the top bar,
//! left to right.
//!
//! Crossing convention: for a positive letter `+i` the strand currently at
//! position `i+1` passes over; for a negative letter `-i` the strand at
//! position `i` passes over. This is the unique choice under which
//! σ1σ2^{2n}σ1σ2 has OU matrix [[0,1,n],[1,0,0],[n,1,0]] at the identity
//! order and the fundamental braid has the strictly-lower all-ones matrix.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;
use crate::perm::Permutation;

/// A braid word: strand count plus a sequence of signed generator letters.
///
/// Every letter `g` satisfies `1 ≤ |g| ≤ n-1`; the empty word is valid for
/// any `n ≥ 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

/// One crossing produced by scanning a diagram top to bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CrossingEvent {
    /// 0-based position of the letter in the word.
    pub index: usize,
    /// Label of the strand passing over.
    pub over: usize,
    /// Label of the strand passing under.
    pub under: usize,
    /// +1 for σ_i, -1 for σ_i^{-1}.
    pub sign: i8,
}

/// The two rewriting moves that connect positive diagrams of the same
/// positive braid: σ_iσ_j = σ_jσ_i for |i-j| ≠ 1, and
/// σ_iσ_jσ_i = σ_jσ_iσ_j for |i-j| = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BraidMove {
    FarCommutation,
    TypeIii,
}

impl BraidMove {
    pub fn name(self) -> &'static str {
        match self {
            BraidMove::FarCommutation => "far-commutation",
            BraidMove::TypeIii => "type-III",
        }
    }
}

impl BraidWord {
    /// Validates and wraps a letter sequence.
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidStrandCount);
        }
        for &g in &letters {
            if g == 0 {
                return Err(Error::ZeroLetter);
            }
            if g.unsigned_abs() as usize >= n {
                return Err(Error::LetterOutOfRange { letter: g, n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn empty(n: usize) -> Result<Self> {
        BraidWord::new(n, Vec::new())
    }

    /// Parses whitespace-separated tokens. Each token is a nonzero integer,
    /// optionally followed by `^` and an integer exponent: `"2^-4"` expands
    /// to four letters `-2`, `"3^2"` to two letters `+3`, exponent `0` to
    /// nothing. When `n` is absent it is inferred as one plus the largest
    /// generator index (1 for the empty word).
    pub fn parse(text: &str, n: Option<usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let (base_str, exp) = match token.split_once('^') {
                Some((b, e)) => {
                    let exp: i32 = e
                        .parse()
                        .map_err(|_| Error::MalformedToken(token.to_string()))?;
                    (b, exp)
                }
                None => (token, 1),
            };
            let base: i32 = base_str
                .parse()
                .map_err(|_| Error::MalformedToken(token.to_string()))?;
            if base == 0 {
                return Err(Error::ZeroLetter);
            }
            let letter = if exp < 0 { -base } else { base };
            for _ in 0..exp.unsigned_abs() {
                letters.push(letter);
            }
        }
        let n = match n {
            Some(n) => n,
            None => {
                1 + letters
                    .iter()
                    .map(|g| g.unsigned_abs() as usize)
                    .max()
                    .unwrap_or(0)
            }
        };
        BraidWord::new(n, letters)
    }

    /// The word as parseable text, one plain letter per token.
    pub fn format(&self) -> String {
        self.letters
            .iter()
            .map(|g| g.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&g| g > 0)
    }

    /// Scans the diagram top to bottom, emitting one event per letter.
    pub fn simulate(&self) -> Vec<CrossingEvent> {
        let mut positions: Vec<usize> = (1..=self.n).collect();
        let mut events = Vec::with_capacity(self.letters.len());
        for (index, &g) in self.letters.iter().enumerate() {
            let i = g.unsigned_abs() as usize;
            let left = positions[i - 1];
            let right = positions[i];
            let (over, under) = if g > 0 { (right, left) } else { (left, right) };
            events.push(CrossingEvent {
                index,
                over,
                under,
                sign: if g > 0 { 1 } else { -1 },
            });
            positions.swap(i - 1, i);
        }
        events
    }

    /// ρ with ρ(i) = j when the strand starting at top position i ends at
    /// bottom position j.
    pub fn braid_permutation(&self) -> Permutation {
        let mut positions: Vec<usize> = (1..=self.n).collect();
        for &g in &self.letters {
            let i = g.unsigned_abs() as usize;
            positions.swap(i - 1, i);
        }
        let mut image = vec![0; self.n];
        for (p, &strand) in positions.iter().enumerate() {
            image[strand - 1] = p + 1;
        }
        Permutation::from_image(image).expect("simulation preserves bijectivity")
    }

    /// Raw count table: `counts[a-1][b-1]` is the number of crossings where
    /// s_a passes over s_b.
    pub fn over_counts(&self) -> Vec<Vec<u64>> {
        let mut counts = vec![vec![0u64; self.n]; self.n];
        for event in self.simulate() {
            counts[event.over - 1][event.under - 1] += 1;
        }
        counts
    }

    /// The OU matrix M_B(π): entry (i, j) counts crossings where s_{π(i+1)}
    /// passes over s_{π(j+1)} (matrix indices 0-based, π 1-based).
    pub fn ou_matrix(&self, pi: &Permutation) -> Result<IntMatrix> {
        if pi.n() != self.n {
            return Err(Error::SizeMismatch(pi.n(), self.n));
        }
        let counts = self.over_counts();
        Ok(IntMatrix::from_fn(self.n, |i, j| {
            BigInt::from(counts[pi.apply(i + 1) - 1][pi.apply(j + 1) - 1])
        }))
    }

    /// wd(s_i, s_j): the number of crossings where s_i passes under s_j.
    pub fn wd_pair(&self, i: usize, j: usize) -> Result<u64> {
        if i < 1 || i > self.n {
            return Err(Error::StrandOutOfRange { strand: i, n: self.n });
        }
        if j < 1 || j > self.n {
            return Err(Error::StrandOutOfRange { strand: j, n: self.n });
        }
        if i == j {
            return Err(Error::EqualStrands);
        }
        Ok(self.over_counts()[j - 1][i - 1])
    }

    /// The braid product: `self` stacked on top of `other`.
    pub fn product(&self, other: &BraidWord) -> Result<BraidWord> {
        if self.n != other.n {
            return Err(Error::StrandCountMismatch(self.n, other.n));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord {
            n: self.n,
            letters,
        })
    }

    /// Rewrites a positive word in place at `position`: σ_iσ_j ↦ σ_jσ_i for
    /// far commutation, σ_iσ_jσ_i ↦ σ_jσ_iσ_j for the type-III move.
    pub fn apply_braid_move(&self, kind: BraidMove, position: usize) -> Result<BraidWord> {
        if !self.is_positive() {
            return Err(Error::NotPositive);
        }
        let not_applicable = Error::MoveNotApplicable {
            kind: kind.name(),
            position,
        };
        let mut letters = self.letters.clone();
        match kind {
            BraidMove::FarCommutation => {
                if position + 1 >= letters.len() {
                    return Err(not_applicable);
                }
                let (a, b) = (letters[position], letters[position + 1]);
                if (a - b).abs() == 1 {
                    return Err(not_applicable);
                }
                letters.swap(position, position + 1);
            }
            BraidMove::TypeIii => {
                if position + 2 >= letters.len() {
                    return Err(not_applicable);
                }
                let (a, b, c) = (letters[position], letters[position + 1], letters[position + 2]);
                if a != c || (a - b).abs() != 1 {
                    return Err(not_applicable);
                }
                letters[position] = b;
                letters[position + 1] = a;
                letters[position + 2] = b;
            }
        }
        Ok(BraidWord {
            n: self.n,
            letters,
        })
    }
}

impl std::fmt::Display for BraidWord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.format())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn word(text: &str, n: Option<usize>) -> BraidWord {
        BraidWord::parse(text, n).unwrap()
    }

    #[test]
    fn parse_infers_strand_count() {
        let b = word("1 -2 3^2", None);
        assert_eq!(b.n(), 4);
        assert_eq!(b.letters(), &[1, -2, 3, 3]);
    }

    #[test]
    fn parse_empty_word_with_explicit_n() {
        let b = word("", Some(3));
        assert_eq!(b.n(), 3);
        assert!(b.is_empty());
    }

    #[test]
    fn parse_negative_exponent_flips_sign() {
        let b = word("2^-4", Some(3));
        assert_eq!(b.letters(), &[-2, -2, -2, -2]);
        assert_eq!(word("-2^-1", Some(3)).letters(), &[2]);
        assert_eq!(word("1^0 2", Some(3)).letters(), &[2]);
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert_eq!(BraidWord::parse("0", None), Err(Error::ZeroLetter));
        assert_eq!(
            BraidWord::parse("3", Some(3)),
            Err(Error::LetterOutOfRange { letter: 3, n: 3 })
        );
        assert_eq!(BraidWord::parse("", Some(0)), Err(Error::InvalidStrandCount));
        assert!(matches!(
            BraidWord::parse("1^", None),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            BraidWord::parse("x", None),
            Err(Error::MalformedToken(_))
        ));
        assert!(matches!(
            BraidWord::parse("1^2^3", None),
            Err(Error::MalformedToken(_))
        ));
    }

    #[test]
    fn single_positive_crossing_has_right_strand_over() {
        let b = word("1", Some(2));
        let events = b.simulate();
        assert_eq!(
            events,
            vec![CrossingEvent {
                index: 0,
                over: 2,
                under: 1,
                sign: 1
            }]
        );
    }

    #[test]
    fn single_negative_crossing_has_left_strand_over() {
        let b = word("-1", Some(2));
        let events = b.simulate();
        assert_eq!(
            events,
            vec![CrossingEvent {
                index: 0,
                over: 1,
                under: 2,
                sign: -1
            }]
        );
    }

    #[test]
    fn empty_word_simulates_to_nothing() {
        assert!(word("", Some(3)).simulate().is_empty());
    }

    #[test]
    fn braid_permutation_of_running_example() {
        let b = word("1 -2 3^2", None);
        assert_eq!(b.braid_permutation().image(), &[3, 1, 2, 4]);
    }

    #[test]
    fn braid_permutation_of_empty_word_is_identity() {
        assert!(word("", Some(5)).braid_permutation().is_identity());
    }

    #[test]
    fn ou_matrix_of_sigma1_sigma2_pow4_sigma1_sigma2() {
        let b = word("1 2^4 1 2", Some(3));
        let m = b.ou_matrix(&Permutation::identity(3)).unwrap();
        let expected = IntMatrix::from_i64_rows(vec![
            vec![0, 1, 2],
            vec![1, 0, 0],
            vec![2, 1, 0],
        ])
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn ou_matrix_rejects_size_mismatch() {
        let b = word("1", Some(2));
        assert_eq!(
            b.ou_matrix(&Permutation::identity(3)),
            Err(Error::SizeMismatch(3, 2))
        );
    }

    #[test]
    fn wd_pair_reads_off_the_ou_matrix() {
        let b = word("1 2^4 1 2", Some(3));
        assert_eq!(b.wd_pair(1, 3).unwrap(), 2);
        let s = word("1", Some(2));
        assert_eq!(s.wd_pair(1, 2).unwrap(), 1);
        assert_eq!(s.wd_pair(2, 1).unwrap(), 0);
        assert_eq!(s.wd_pair(1, 1), Err(Error::EqualStrands));
        assert_eq!(
            s.wd_pair(1, 3),
            Err(Error::StrandOutOfRange { strand: 3, n: 2 })
        );
    }

    #[test]
    fn product_concatenates() {
        let b = word("1", Some(3));
        let c = word("2", Some(3));
        assert_eq!(b.product(&c).unwrap().letters(), &[1, 2]);
        let e = word("", Some(3));
        assert_eq!(e.product(&c).unwrap(), c);
        assert_eq!(
            b.product(&word("1", Some(2))),
            Err(Error::StrandCountMismatch(3, 2))
        );
    }

    #[test]
    fn squared_fundamental_braid_has_all_ones_off_diagonal() {
        let delta = crate::families::fundamental(3).unwrap();
        let squared = delta.product(&delta).unwrap();
        let m = squared.ou_matrix(&Permutation::identity(3)).unwrap();
        let expected = IntMatrix::from_i64_rows(vec![
            vec![0, 1, 1],
            vec![1, 0, 1],
            vec![1, 1, 0],
        ])
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn far_commutation_swaps_distant_letters() {
        let b = word("1 3", Some(4));
        let moved = b.apply_braid_move(BraidMove::FarCommutation, 0).unwrap();
        assert_eq!(moved.letters(), &[3, 1]);
    }

    #[test]
    fn type_iii_rewrites_adjacent_triple() {
        let b = word("1 2 1", Some(3));
        let moved = b.apply_braid_move(BraidMove::TypeIii, 0).unwrap();
        assert_eq!(moved.letters(), &[2, 1, 2]);
    }

    #[test]
    fn moves_reject_wrong_patterns() {
        let b = word("1 2", Some(3));
        assert_eq!(
            b.apply_braid_move(BraidMove::FarCommutation, 0),
            Err(Error::MoveNotApplicable {
                kind: "far-commutation",
                position: 0
            })
        );
        assert_eq!(
            b.apply_braid_move(BraidMove::TypeIii, 0),
            Err(Error::MoveNotApplicable {
                kind: "type-III",
                position: 0
            })
        );
        let negative = word("-1 3", Some(4));
        assert_eq!(
            negative.apply_braid_move(BraidMove::FarCommutation, 0),
            Err(Error::NotPositive)
        );
    }
}
