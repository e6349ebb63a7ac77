use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Sparse matrix with arbitrary-precision integer entries.
///
/// Only nonzero entries are stored, keyed by `(row, col)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: BTreeMap::new(),
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries.insert((i, i), BigInt::from(1));
        }
        m
    }

    /// Builds a matrix from dense rows. All rows must have the same length.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), ncols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::DimensionMismatch {
                    expected: ncols,
                    found: row.len(),
                });
            }
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v.clone().into());
            }
        }
        Ok(m)
    }

    /// Builds a matrix from `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triples<I>(rows: usize, cols: usize, triples: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, BigInt)>,
    {
        let mut m = Self::zeros(rows, cols);
        for (r, c, v) in triples {
            if r >= rows || c >= cols {
                return Err(Error::OutOfBounds {
                    row: r,
                    col: c,
                    rows,
                    cols,
                });
            }
            m.add_at(r, c, &v);
        }
        Ok(m)
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, row: usize, col: usize) -> BigInt {
        self.entries
            .get(&(row, col))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Overwrites an entry. Panics if the position is out of bounds.
    pub fn set(&mut self, row: usize, col: usize, value: BigInt) {
        assert!(
            row < self.rows && col < self.cols,
            "index ({row}, {col}) out of bounds for {}x{}",
            self.rows,
            self.cols
        );
        if value.is_zero() {
            self.entries.remove(&(row, col));
        } else {
            self.entries.insert((row, col), value);
        }
    }

    /// Adds `value` to an entry. Panics if the position is out of bounds.
    pub fn add_at(&mut self, row: usize, col: usize, value: &BigInt) {
        let cur = self.get(row, col);
        self.set(row, col, cur + value);
    }

    /// Nonzero entries in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        self.entries.iter().map(|(&(r, c), v)| (r, c, v))
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            entries: self
                .entries
                .iter()
                .map(|(&(r, c), v)| ((c, r), v.clone()))
                .collect(),
        }
    }

    pub fn try_mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut rhs_rows: Vec<Vec<(usize, &BigInt)>> = vec![Vec::new(); rhs.rows];
        for (&(r, c), v) in &rhs.entries {
            rhs_rows[r].push((c, v));
        }
        let mut acc: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
        for (&(i, k), a) in &self.entries {
            for &(j, b) in &rhs_rows[k] {
                *acc.entry((i, j)).or_insert_with(BigInt::zero) += a * b;
            }
        }
        acc.retain(|_, v| !v.is_zero());
        Ok(IntMatrix {
            rows: self.rows,
            cols: rhs.cols,
            entries: acc,
        })
    }

    pub fn try_sub(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        let mut out = self.clone();
        for (&(r, c), v) in &rhs.entries {
            out.add_at(r, c, &-v);
        }
        Ok(out)
    }

    /// Dense copy, mostly for tests and display.
    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        let mut d = vec![vec![BigInt::zero(); self.cols]; self.rows];
        for (&(r, c), v) in &self.entries {
            d[r][c] = v.clone();
        }
        d
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries
            .values()
            .map(|v| v.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        self.try_mul(rhs).expect("matrix product dimension mismatch")
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix {}x{} [", self.rows, self.cols)?;
        for (i, (&(r, c), v)) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({r},{c})={v}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_entries_are_not_stored() {
        let m = IntMatrix::from_rows(&[vec![0, 1], vec![0, 0]]).unwrap();
        assert_eq!(m.nnz(), 1);
        let mut m = m;
        m.add_at(0, 1, &BigInt::from(-1));
        assert!(m.is_zero());
    }

    #[test]
    fn product_matches_dense() {
        let a = IntMatrix::from_rows(&[vec![1, 2], vec![3, 4], vec![0, -1]]).unwrap();
        let b = IntMatrix::from_rows(&[vec![2, 0, 1], vec![1, 1, 0]]).unwrap();
        let c = &a * &b;
        let expect = IntMatrix::from_rows(&[vec![4, 2, 1], vec![10, 4, 3], vec![-1, -1, 0]]).unwrap();
        assert_eq!(c, expect);
    }

    #[test]
    fn mismatched_product_is_an_error() {
        let a = IntMatrix::zeros(2, 3);
        assert!(a.try_mul(&a).is_err());
    }

    #[test]
    fn triples_out_of_bounds_rejected() {
        let r = IntMatrix::from_triples(2, 2, [(2, 0, BigInt::from(1))]);
        assert!(matches!(r, Err(Error::OutOfBounds { .. })));
    }
}
