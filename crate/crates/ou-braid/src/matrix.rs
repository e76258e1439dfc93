//! Exact integer linear algebra on square matrices.
//!
//! Everything runs over arbitrary-precision integers: the determinant uses
//! fraction-free (Bareiss) elimination, the rank a fraction-free echelon
//! form over the rationals, and the characteristic polynomial the
//! Faddeev–LeVerrier recurrence, whose internal divisions are all exact.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A square matrix of arbitrary-precision integers, row-major, 0-indexed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    n: usize,
    entries: Vec<BigInt>,
}

/// A monic characteristic polynomial det(λI − M), coefficients ordered from
/// λⁿ down to the constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharPoly {
    coefficients: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        IntMatrix {
            n,
            entries: vec![BigInt::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    /// The elementary matrix I_kl: the identity with rows k and l swapped.
    pub fn swap_elementary(n: usize, k: usize, l: usize) -> Result<Self> {
        if k >= n || l >= n {
            return Err(Error::IndexOutOfRange);
        }
        let mut m = IntMatrix::identity(n);
        m.set(k, k, BigInt::zero());
        m.set(l, l, BigInt::zero());
        m.set(k, l, BigInt::one());
        m.set(l, k, BigInt::one());
        Ok(m)
    }

    /// The exchange matrix I′ with ones on the anti-diagonal.
    pub fn exchange(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m.set(i, n - 1 - i, BigInt::one());
        }
        m
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        assert!(n >= 1, "matrix dimension must be at least 1");
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        IntMatrix { n, entries }
    }

    pub fn from_i64_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || rows.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        Ok(IntMatrix::from_fn(n, |i, j| BigInt::from(rows[i][j])))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        assert!(i < self.n && j < self.n, "matrix index out of range");
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        assert!(i < self.n && j < self.n, "matrix index out of range");
        self.entries[i * self.n + j] = value;
    }

    pub fn trace(&self) -> BigInt {
        (0..self.n).map(|i| self.entry(i, i)).sum()
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| self.entry(j, i).clone())
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(IntMatrix::from_fn(self.n, |i, j| {
            self.entry(i, j) + other.entry(i, j)
        }))
    }

    pub fn scaled(&self, factor: &BigInt) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| self.entry(i, j) * factor)
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.n != other.n {
            return Err(Error::SizeMismatch(self.n, other.n));
        }
        Ok(IntMatrix::from_fn(self.n, |i, j| {
            (0..self.n).map(|k| self.entry(i, k) * other.entry(k, j)).sum()
        }))
    }

    /// Conjugation by I_kl: swaps rows k, l and then columns k, l. Requires
    /// `k < l < n` (0-based).
    pub fn conjugate_swap(&self, k: usize, l: usize) -> Result<IntMatrix> {
        if k >= l || l >= self.n {
            return Err(Error::IndexOutOfRange);
        }
        let swap = |i: usize| {
            if i == k {
                l
            } else if i == l {
                k
            } else {
                i
            }
        };
        Ok(IntMatrix::from_fn(self.n, |i, j| {
            self.entry(swap(i), swap(j)).clone()
        }))
    }

    /// 180° rotation: entry (i, j) of the result is entry (n-1-i, n-1-j).
    pub fn rotate180(&self) -> IntMatrix {
        IntMatrix::from_fn(self.n, |i, j| {
            self.entry(self.n - 1 - i, self.n - 1 - j).clone()
        })
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.entry(i, j) == self.entry(j, i)))
    }

    pub fn is_strict_lower_triangular(&self) -> bool {
        (0..self.n).all(|i| (i..self.n).all(|j| self.entry(i, j).is_zero()))
    }

    pub fn is_strict_upper_triangular(&self) -> bool {
        (0..self.n).all(|i| (0..=i).all(|j| self.entry(i, j).is_zero()))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        let n = self.n;
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut negated = false;
        let mut prev = BigInt::one();
        for k in 0..n.saturating_sub(1) {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        negated = !negated;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        if negated {
            -det
        } else {
            det
        }
    }

    /// Rank over the rationals, by fraction-free elimination with column
    /// pivoting.
    pub fn rank(&self) -> usize {
        let n = self.n;
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| self.entries[i * n..(i + 1) * n].to_vec())
            .collect();
        let mut prev = BigInt::one();
        let mut row = 0;
        for col in 0..n {
            let Some(pivot_row) = (row..n).find(|&r| !m[r][col].is_zero()) else {
                continue;
            };
            m.swap(row, pivot_row);
            for i in row + 1..n {
                for j in col + 1..n {
                    let num = &m[i][j] * &m[row][col] - &m[i][col] * &m[row][j];
                    debug_assert!((&num % &prev).is_zero(), "Bareiss division not exact");
                    m[i][j] = num / &prev;
                }
                m[i][col] = BigInt::zero();
            }
            prev = m[row][col].clone();
            row += 1;
            if row == n {
                break;
            }
        }
        row
    }

    /// Exact monic characteristic polynomial det(λI − M), by the
    /// Faddeev–LeVerrier recurrence.
    pub fn charpoly(&self) -> CharPoly {
        let n = self.n;
        let mut coefficients = Vec::with_capacity(n + 1);
        coefficients.push(BigInt::one());
        let mut a = self.clone();
        for k in 1..=n {
            let t = a.trace();
            debug_assert!((&t % BigInt::from(k)).is_zero(), "trace division not exact");
            let c = -t / BigInt::from(k);
            if k < n {
                let shifted = a.add(&IntMatrix::identity(n).scaled(&c)).expect("same size");
                a = self.mul(&shifted).expect("same size");
            }
            coefficients.push(c);
        }
        CharPoly { coefficients }
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.entry(i, j))?;
            }
            if i + 1 < self.n {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl CharPoly {
    /// Coefficients from λⁿ down to the constant term (n + 1 of them).
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn constant_term(&self) -> &BigInt {
        self.coefficients.last().expect("monic polynomial is nonempty")
    }
}

impl std::fmt::Display for CharPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let deg = self.degree();
        let mut wrote = false;
        for (k, c) in self.coefficients.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = deg - k;
            if wrote {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let abs = c.abs();
            if abs != BigInt::one() || power == 0 {
                write!(f, "{abs}")?;
                if power > 0 {
                    write!(f, "*")?;
                }
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{power}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}
