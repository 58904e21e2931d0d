use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{ExactError, Rational};

/// Sparse matrix over the rationals. Zero entries are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), Rational::one());
        }
        m
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> Result<Self, ExactError> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(ExactError::IndexOutOfRange {
                    row: i,
                    col: row.len(),
                    rows: rows.len(),
                    cols,
                });
            }
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone())?;
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Rational {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) -> Result<(), ExactError> {
        if row >= self.rows || col >= self.cols {
            return Err(ExactError::IndexOutOfRange {
                row,
                col,
                rows: self.rows,
                cols: self.cols,
            });
        }
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
        Ok(())
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &Rational)> {
        self.entries.iter()
    }

    /// Exact rank by fraction-free (Bareiss) elimination.
    pub fn rank(&self) -> usize {
        let (mut a, _) = self.integer_rows();
        bareiss(&mut a, self.cols).rank
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn determinant(&self) -> Result<Rational, ExactError> {
        if self.rows != self.cols {
            return Err(ExactError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(Rational::one());
        }
        let (mut a, scale) = self.integer_rows();
        let out = bareiss(&mut a, self.cols);
        if out.rank < self.rows {
            return Ok(Rational::zero());
        }
        let mut det = a[self.rows - 1][self.cols - 1].clone();
        if out.swaps % 2 == 1 {
            det = -det;
        }
        Ok(Rational::new(det, scale))
    }

    /// Dense integer copy where row `i` has been multiplied by the lcm of its
    /// denominators. Returns the product of those multipliers.
    fn integer_rows(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut dense = vec![vec![BigInt::zero(); self.cols]; self.rows];
        let mut lcms = vec![BigInt::one(); self.rows];
        for (&(i, _), v) in &self.entries {
            lcms[i] = lcms[i].lcm(v.denom());
        }
        for (&(i, j), v) in &self.entries {
            dense[i][j] = v.numer() * (&lcms[i] / v.denom());
        }
        let scale = lcms.iter().product();
        (dense, scale)
    }
}

struct Elimination {
    rank: usize,
    swaps: usize,
}

/// In-place Bareiss elimination with row pivoting. Every intermediate entry is
/// a minor of the input, so each division is exact.
fn bareiss(a: &mut [Vec<BigInt>], cols: usize) -> Elimination {
    let rows = a.len();
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut swaps = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        // smallest nonzero pivot keeps the numbers short
        let pivot = (rank..rows)
            .filter(|&i| !a[i][col].is_zero())
            .min_by(|&i, &j| a[i][col].abs().cmp(&a[j][col].abs()));
        let Some(p) = pivot else { continue };
        if p != rank {
            a.swap(p, rank);
            swaps += 1;
        }
        let (top, rest) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pv = &pivot_row[col];
        for row in rest.iter_mut() {
            let factor = std::mem::take(&mut row[col]);
            for j in col + 1..cols {
                let v = pv * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
        }
        prev = a[rank][col].clone();
        rank += 1;
    }
    Elimination { rank, swaps }
}
