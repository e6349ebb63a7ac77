use num_rational::BigRational;

use super::{CoefficientSpec, Field, IntMatrix, PrimeField, Rationals};
use crate::error::{Error, Result};

/// Reduced row echelon form of a dense matrix.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    /// Nonzero rows only, one per pivot.
    pub rows: Vec<Vec<E>>,
    pub pivots: Vec<usize>,
    pub ncols: usize,
}

impl<E: Clone> Echelon<E> {
    /// Gauss-Jordan elimination.
    pub fn reduce<F: Field<Elem = E>>(field: &F, mut rows: Vec<Vec<E>>, ncols: usize) -> Self {
        let mut pivots = Vec::new();
        let mut next = 0;
        for col in 0..ncols {
            let Some(found) = (next..rows.len()).find(|&r| !field.is_zero(&rows[r][col])) else {
                continue;
            };
            rows.swap(next, found);
            let inv = field.inv(&rows[next][col]);
            for x in rows[next].iter_mut().skip(col) {
                *x = field.mul(x, &inv);
            }
            let pivot_row = rows[next].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r == next || field.is_zero(&row[col]) {
                    continue;
                }
                let factor = row[col].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !field.is_zero(p) {
                        *x = field.sub(x, &field.mul(&factor, p));
                    }
                }
            }
            pivots.push(col);
            next += 1;
            if next == rows.len() {
                break;
            }
        }
        rows.truncate(next);
        Echelon {
            rows,
            pivots,
            ncols,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Basis of the null space of the reduced matrix, one vector per free column.
    pub fn kernel<F: Field<Elem = E>>(&self, field: &F) -> Vec<Vec<E>> {
        let mut is_pivot = vec![false; self.ncols];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ncols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![field.zero(); self.ncols];
                v[free] = field.one();
                for (row, &p) in self.rows.iter().zip(&self.pivots) {
                    v[p] = field.neg(&row[free]);
                }
                v
            })
            .collect()
    }
}

/// Dense copy of an integer matrix over a field.
pub fn to_dense<F: Field>(field: &F, m: &IntMatrix) -> Vec<Vec<F::Elem>> {
    let mut d = vec![vec![field.zero(); m.ncols()]; m.nrows()];
    for (r, c, v) in m.entries() {
        d[r][c] = field.from_int(v);
    }
    d
}

pub fn rank_in<F: Field>(field: &F, m: &IntMatrix) -> usize {
    Echelon::reduce(field, to_dense(field, m), m.ncols()).rank()
}

pub fn kernel_basis_in<F: Field>(field: &F, m: &IntMatrix) -> Vec<Vec<F::Elem>> {
    Echelon::reduce(field, to_dense(field, m), m.ncols()).kernel(field)
}

/// Rank over a field. Integer coefficients are rejected: ask for the rational rank explicitly.
pub fn rank(m: &IntMatrix, coeff: CoefficientSpec) -> Result<usize> {
    match coeff {
        CoefficientSpec::Integers => Err(Error::FieldRequired(coeff.to_string())),
        CoefficientSpec::Rationals => Ok(rank_in(&Rationals, m)),
        CoefficientSpec::PrimeField(p) => Ok(rank_in(&PrimeField::new(p)?, m)),
    }
}

/// Kernel basis over a field. Prime-field vectors are returned as their
/// canonical representatives in `[0, p)`.
pub fn kernel_basis(m: &IntMatrix, coeff: CoefficientSpec) -> Result<Vec<Vec<BigRational>>> {
    fn lift<F: Field>(field: &F, m: &IntMatrix) -> Vec<Vec<BigRational>> {
        kernel_basis_in(field, m)
            .iter()
            .map(|v| v.iter().map(|x| field.to_rational(x)).collect())
            .collect()
    }
    match coeff {
        CoefficientSpec::Integers => Err(Error::FieldRequired(coeff.to_string())),
        CoefficientSpec::Rationals => Ok(lift(&Rationals, m)),
        CoefficientSpec::PrimeField(p) => Ok(lift(&PrimeField::new(p)?, m)),
    }
}
