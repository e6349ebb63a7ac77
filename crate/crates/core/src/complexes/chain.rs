use super::HomologyGroup;
use crate::algebra::{rank_in, snf, CoefficientSpec, IntMatrix, PrimeField, Rationals};
use crate::error::{Error, Result};

/// A bounded chain complex of free abelian groups.
///
/// `boundary(n)` maps degree `n` to degree `n - 1`. In degree 0 the target is
/// either zero-dimensional or, for an augmented complex, a single copy of the
/// integers.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ChainComplex {
    dims: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn new(dims: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if dims.len() != boundaries.len() {
            return Err(Error::DimensionMismatch {
                expected: dims.len(),
                found: boundaries.len(),
            });
        }
        for (n, d) in boundaries.iter().enumerate() {
            if d.ncols() != dims[n] {
                return Err(Error::DimensionMismatch {
                    expected: dims[n],
                    found: d.ncols(),
                });
            }
            if n == 0 && d.nrows() > 1 {
                return Err(Error::DimensionMismatch {
                    expected: 1,
                    found: d.nrows(),
                });
            }
            if n > 0 && d.nrows() != dims[n - 1] {
                return Err(Error::DimensionMismatch {
                    expected: dims[n - 1],
                    found: d.nrows(),
                });
            }
        }
        Ok(ChainComplex { dims, boundaries })
    }

    /// Number of stored degrees (`0..len`).
    pub fn len(&self) -> usize {
        self.dims.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dims.is_empty()
    }

    pub fn rank_at(&self, n: usize) -> usize {
        self.dims.get(n).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Boundary out of degree `n`; a zero map outside the stored range.
    pub fn boundary(&self, n: usize) -> IntMatrix {
        match self.boundaries.get(n) {
            Some(d) => d.clone(),
            None => IntMatrix::zeros(if n == 0 { 0 } else { self.rank_at(n - 1) }, 0),
        }
    }

    pub fn boundary_ref(&self, n: usize) -> Option<&IntMatrix> {
        self.boundaries.get(n)
    }

    pub fn boundary_mut(&mut self, n: usize) -> Option<&mut IntMatrix> {
        self.boundaries.get_mut(n)
    }

    /// Whether every composite `boundary(n-1) * boundary(n)` vanishes.
    pub fn is_complex(&self) -> bool {
        self.boundaries
            .windows(2)
            .all(|w| w[0].try_mul(&w[1]).map(|m| m.is_zero()).unwrap_or(false))
    }

    /// Homology in degrees `0..len`.
    pub fn homology(&self, coeff: CoefficientSpec) -> Vec<HomologyGroup> {
        let n = self.dims.len();
        match coeff {
            CoefficientSpec::Integers => {
                let factors: Vec<_> = self.boundaries.iter().map(snf).collect();
                (0..n)
                    .map(|q| {
                        let out_rank = factors[q].rank();
                        let (in_rank, torsion) = match factors.get(q + 1) {
                            Some(f) => (f.rank(), f.torsion()),
                            None => (0, Vec::new()),
                        };
                        HomologyGroup::new(self.dims[q] - out_rank - in_rank, torsion)
                    })
                    .collect()
            }
            CoefficientSpec::Rationals => self.field_homology(|m| rank_in(&Rationals, m)),
            CoefficientSpec::PrimeField(p) => {
                let f = PrimeField::new(p).expect("coefficient spec holds a prime");
                self.field_homology(|m| rank_in(&f, m))
            }
        }
    }

    fn field_homology(&self, rank: impl Fn(&IntMatrix) -> usize) -> Vec<HomologyGroup> {
        let ranks: Vec<usize> = self.boundaries.iter().map(rank).collect();
        (0..self.dims.len())
            .map(|q| {
                let in_rank = ranks.get(q + 1).copied().unwrap_or(0);
                HomologyGroup::free(self.dims[q] - ranks[q] - in_rank)
            })
            .collect()
    }
}
