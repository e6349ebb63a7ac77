use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::IntMatrix;

/// Invariant factors `d1 | d2 | ...` of an integer matrix (all positive).
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(transparent)]
pub struct InvariantFactors(#[serde(serialize_with = "crate::serde_util::bigints")] Vec<BigInt>);

impl InvariantFactors {
    pub fn factors(&self) -> &[BigInt] {
        &self.0
    }

    /// Number of factors, i.e. the rank over the rationals.
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// Factors greater than one; the torsion contributed by this matrix.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.0.iter().filter(|d| !d.is_one()).cloned().collect()
    }

    pub fn all_units(&self) -> bool {
        self.0.iter().all(One::is_one)
    }

    pub fn into_vec(self) -> Vec<BigInt> {
        self.0
    }
}

/// Working copy of a matrix that supports row and column operations sparsely.
struct Elimination {
    rows: Vec<BTreeMap<usize, BigInt>>,
    col_rows: Vec<BTreeSet<usize>>,
}

impl Elimination {
    fn new(m: &IntMatrix) -> Self {
        let mut rows = vec![BTreeMap::new(); m.nrows()];
        let mut col_rows = vec![BTreeSet::new(); m.ncols()];
        for (r, c, v) in m.entries() {
            rows[r].insert(c, v.clone());
            col_rows[c].insert(r);
        }
        Elimination { rows, col_rows }
    }

    /// Nonzero entry of least absolute value; ties go to the smallest (row, col).
    fn pivot(&self) -> Option<(usize, usize)> {
        let mut best: Option<((usize, usize), &BigInt)> = None;
        for (r, row) in self.rows.iter().enumerate() {
            for (&c, v) in row {
                let better = match best {
                    None => true,
                    Some((_, b)) => v.magnitude() < b.magnitude(),
                };
                if better {
                    if v.magnitude().is_one() {
                        return Some((r, c));
                    }
                    best = Some(((r, c), v));
                }
            }
        }
        best.map(|(pos, _)| pos)
    }

    fn set(&mut self, r: usize, c: usize, v: BigInt) {
        if v.is_zero() {
            self.rows[r].remove(&c);
            self.col_rows[c].remove(&r);
        } else {
            self.rows[r].insert(c, v);
            self.col_rows[c].insert(r);
        }
    }

    /// row[target] -= q * row[src]
    fn row_axpy(&mut self, target: usize, src: usize, q: &BigInt) {
        let src_row: Vec<(usize, BigInt)> =
            self.rows[src].iter().map(|(&c, v)| (c, v.clone())).collect();
        for (c, v) in src_row {
            let cur = self.rows[target].get(&c).cloned().unwrap_or_default();
            self.set(target, c, cur - q * v);
        }
    }

    /// col[target] -= q * col[src]
    fn col_axpy(&mut self, target: usize, src: usize, q: &BigInt) {
        let src_rows: Vec<usize> = self.col_rows[src].iter().copied().collect();
        for r in src_rows {
            let v = self.rows[r][&src].clone();
            let cur = self.rows[r].get(&target).cloned().unwrap_or_default();
            self.set(r, target, cur - q * v);
        }
    }

    fn run(mut self) -> Vec<BigInt> {
        let mut diagonal = Vec::new();
        while let Some((r, c)) = self.pivot() {
            let a = self.rows[r][&c].clone();
            let others: Vec<usize> = self.col_rows[c].iter().copied().filter(|&i| i != r).collect();
            for i in others {
                let q = self.rows[i][&c].div_floor(&a);
                self.row_axpy(i, r, &q);
            }
            let others: Vec<usize> = self.rows[r].keys().copied().filter(|&j| j != c).collect();
            for j in others {
                let q = self.rows[r][&j].div_floor(&a);
                self.col_axpy(j, c, &q);
            }
            if self.rows[r].len() == 1 && self.col_rows[c].len() == 1 {
                self.set(r, c, BigInt::zero());
                diagonal.push(a.abs());
            }
            // otherwise a remainder smaller than |a| survived; pick again
        }
        diagonal
    }
}

/// Invariant factors of `m` by sparse Smith normal form elimination.
pub fn snf(m: &IntMatrix) -> InvariantFactors {
    let mut d = Elimination::new(m).run();
    // diag(a, b) ~ diag(gcd, lcm); sweeping pairs yields the divisibility chain
    d.sort();
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            if d[j].is_multiple_of(&d[i]) {
                continue;
            }
            let g = d[i].gcd(&d[j]);
            let l = &d[i] / &g * &d[j];
            d[i] = g;
            d[j] = l;
        }
    }
    InvariantFactors(d)
}
