//! Independent oracles shared by the integration suites. Everything here
//! recomputes results from first principles (cofactor expansion, principal
//! minors, exhaustive enumeration, raw event counting) so the main
//! implementations have something external to agree with.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::{One, Zero};
use ou_braid::{BraidWord, IntMatrix, Permutation};

/// Determinant by recursive cofactor expansion along the first row.
pub fn det_cofactor(m: &IntMatrix) -> BigInt {
    fn go(rows: &[Vec<BigInt>]) -> BigInt {
        let n = rows.len();
        if n == 1 {
            return rows[0][0].clone();
        }
        let mut total = BigInt::zero();
        for j in 0..n {
            if rows[0][j].is_zero() {
                continue;
            }
            let minor: Vec<Vec<BigInt>> = rows[1..]
                .iter()
                .map(|row| {
                    row.iter()
                        .enumerate()
                        .filter(|&(c, _)| c != j)
                        .map(|(_, v)| v.clone())
                        .collect()
                })
                .collect();
            let term = &rows[0][j] * go(&minor);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    go(&to_rows(m))
}

fn to_rows(m: &IntMatrix) -> Vec<Vec<BigInt>> {
    (0..m.n())
        .map(|i| (0..m.n()).map(|j| m.entry(i, j).clone()).collect())
        .collect()
}

/// Characteristic polynomial det(λI − M) by principal-minor expansion:
/// the coefficient of λ^{n-k} is (−1)^k times the sum of all k × k
/// principal minors.
pub fn charpoly_principal_minors(m: &IntMatrix) -> Vec<BigInt> {
    let n = m.n();
    let mut coefficients = vec![BigInt::one()];
    for k in 1..=n {
        let mut sum = BigInt::zero();
        for subset in k_subsets(n, k) {
            let sub = IntMatrix::from_fn(k, |i, j| m.entry(subset[i], subset[j]).clone());
            sum += det_cofactor(&sub);
        }
        coefficients.push(if k % 2 == 0 { sum } else { -sum });
    }
    coefficients
}

/// Rank as the largest k admitting a nonzero k × k minor (any rows and
/// columns). Exponential; keep n small.
pub fn rank_by_minors(m: &IntMatrix) -> usize {
    let n = m.n();
    for k in (1..=n).rev() {
        for rows in k_subsets(n, k) {
            for cols in k_subsets(n, k) {
                let sub = IntMatrix::from_fn(k, |i, j| m.entry(rows[i], cols[j]).clone());
                if !det_cofactor(&sub).is_zero() {
                    return k;
                }
            }
        }
    }
    0
}

fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == k {
            out.push(current.clone());
            return;
        }
        for v in start..n {
            current.push(v);
            go(v + 1, n, k, current, out);
            current.pop();
        }
    }
    go(0, n, k, &mut current, &mut out);
    out
}

/// All permutations of 1..=n as image sequences, lexicographic.
pub fn all_orders(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut image: Vec<usize> = (1..=n).collect();
    loop {
        out.push(image.clone());
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| image[i] < image[i + 1]) else {
            return out;
        };
        let j = (i + 1..n).rev().find(|&j| image[j] > image[i]).unwrap();
        image.swap(i, j);
        image[i + 1..].reverse();
    }
}

/// Counts, straight off the event stream, the crossings whose under-strand
/// precedes its over-strand in the order π.
pub fn objective_by_event_count(word: &BraidWord, pi: &Permutation) -> u64 {
    let position_of = pi.inverse();
    word.simulate()
        .iter()
        .filter(|event| position_of.apply(event.under) < position_of.apply(event.over))
        .count() as u64
}

/// Warping degree by n!-enumeration of strand orders.
pub fn wd_by_enumeration(word: &BraidWord) -> u64 {
    all_orders(word.n())
        .into_iter()
        .map(|image| {
            let pi = Permutation::from_image(image).unwrap();
            objective_by_event_count(word, &pi)
        })
        .min()
        .expect("at least one order exists")
}

/// Canonical multiset of the matrix's rows (or columns), computed here so
/// multiset comparisons do not depend on the library's canonicalization.
pub fn canonical_lines(m: &IntMatrix, columns: bool) -> Vec<Vec<BigInt>> {
    let n = m.n();
    let mut lines: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut line: Vec<BigInt> = (0..n)
                .map(|j| {
                    if columns {
                        m.entry(j, i).clone()
                    } else {
                        m.entry(i, j).clone()
                    }
                })
                .collect();
            line.sort();
            line
        })
        .collect();
    lines.sort();
    lines
}
