use num_bigint::BigInt;

use super::linear::{to_dense, Echelon};
use super::{CoefficientSpec, Field, IntMatrix, PrimeField, Rationals};
use crate::error::{Error, Result};

/// A subspace of `F^ambient`, stored as a reduced echelon basis.
#[derive(Clone, Debug)]
pub struct Subspace<F: Field> {
    field: F,
    echelon: Echelon<F::Elem>,
}

impl<F: Field> Subspace<F> {
    pub fn zero(field: &F, ambient: usize) -> Self {
        Self::span(field, ambient, Vec::new())
    }

    pub fn full(field: &F, ambient: usize) -> Self {
        Self::coordinate(field, ambient, 0..ambient)
    }

    /// Span of the given standard basis vectors.
    pub fn coordinate(field: &F, ambient: usize, coords: impl IntoIterator<Item = usize>) -> Self {
        let vectors = coords
            .into_iter()
            .map(|i| {
                let mut v = vec![field.zero(); ambient];
                v[i] = field.one();
                v
            })
            .collect();
        Self::span(field, ambient, vectors)
    }

    /// Panics if a vector has the wrong length; use [`Subspace::try_span`] for checked input.
    pub fn span(field: &F, ambient: usize, vectors: Vec<Vec<F::Elem>>) -> Self {
        Self::try_span(field, ambient, vectors).expect("vector length differs from ambient dimension")
    }

    pub fn try_span(field: &F, ambient: usize, vectors: Vec<Vec<F::Elem>>) -> Result<Self> {
        if let Some(v) = vectors.iter().find(|v| v.len() != ambient) {
            return Err(Error::DimensionMismatch {
                expected: ambient,
                found: v.len(),
            });
        }
        Ok(Subspace {
            field: field.clone(),
            echelon: Echelon::reduce(field, vectors, ambient),
        })
    }

    pub fn dim(&self) -> usize {
        self.echelon.rank()
    }

    pub fn ambient(&self) -> usize {
        self.echelon.ncols
    }

    pub fn basis(&self) -> &[Vec<F::Elem>] {
        &self.echelon.rows
    }

    fn check_ambient(&self, other: &Self) -> Result<()> {
        if self.ambient() != other.ambient() {
            return Err(Error::DimensionMismatch {
                expected: self.ambient(),
                found: other.ambient(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let mut vectors = self.basis().to_vec();
        vectors.extend_from_slice(other.basis());
        Self::try_span(&self.field, self.ambient(), vectors)
    }

    /// Exact intersection via the kernel of `[U^T | -W^T]`.
    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_ambient(other)?;
        let f = &self.field;
        let (a, b) = (self.dim(), other.dim());
        if a == 0 || b == 0 {
            return Ok(Self::zero(f, self.ambient()));
        }
        let rows: Vec<Vec<F::Elem>> = (0..self.ambient())
            .map(|i| {
                self.basis()
                    .iter()
                    .map(|u| u[i].clone())
                    .chain(other.basis().iter().map(|w| f.neg(&w[i])))
                    .collect()
            })
            .collect();
        let kernel = Echelon::reduce(f, rows, a + b).kernel(f);
        let vectors = kernel
            .iter()
            .map(|coeffs| combine(f, self.basis(), &coeffs[..a], self.ambient()))
            .collect();
        Self::try_span(f, self.ambient(), vectors)
    }

    /// `{ M u : u in self }` for a dense `M` with `self.ambient()` columns.
    pub fn image(&self, matrix: &[Vec<F::Elem>], target_dim: usize) -> Result<Self> {
        check_matrix(matrix, target_dim, self.ambient())?;
        let f = &self.field;
        let vectors = self
            .basis()
            .iter()
            .map(|u| apply(f, matrix, u, target_dim))
            .collect();
        Self::try_span(f, target_dim, vectors)
    }

    /// `{ v : M v in self }` for a dense `M` with `self.ambient()` rows.
    pub fn preimage(&self, matrix: &[Vec<F::Elem>], source_dim: usize) -> Result<Self> {
        check_matrix(matrix, self.ambient(), source_dim)?;
        let f = &self.field;
        let k = self.dim();
        let rows: Vec<Vec<F::Elem>> = (0..self.ambient())
            .map(|i| {
                matrix[i]
                    .iter()
                    .cloned()
                    .chain(self.basis().iter().map(|u| f.neg(&u[i])))
                    .collect()
            })
            .collect();
        let kernel = Echelon::reduce(f, rows, source_dim + k).kernel(f);
        let vectors = kernel.into_iter().map(|mut v| {
            v.truncate(source_dim);
            v
        });
        Self::try_span(f, source_dim, vectors.collect())
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        let other = Self::try_span(&self.field, self.ambient(), vec![v.to_vec()])?;
        Ok(self.sum(&other)?.dim() == self.dim())
    }
}

fn check_matrix<E>(matrix: &[Vec<E>], rows: usize, cols: usize) -> Result<()> {
    if matrix.len() != rows {
        return Err(Error::DimensionMismatch {
            expected: rows,
            found: matrix.len(),
        });
    }
    if let Some(r) = matrix.iter().find(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch {
            expected: cols,
            found: r.len(),
        });
    }
    Ok(())
}

fn combine<F: Field>(f: &F, basis: &[Vec<F::Elem>], coeffs: &[F::Elem], n: usize) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); n];
    for (b, c) in basis.iter().zip(coeffs) {
        if f.is_zero(c) {
            continue;
        }
        for (o, x) in out.iter_mut().zip(b) {
            *o = f.add(o, &f.mul(c, x));
        }
    }
    out
}

fn apply<F: Field>(f: &F, matrix: &[Vec<F::Elem>], v: &[F::Elem], n: usize) -> Vec<F::Elem> {
    let mut out = vec![f.zero(); n];
    for (o, row) in out.iter_mut().zip(matrix) {
        for (a, x) in row.iter().zip(v) {
            if !f.is_zero(a) && !f.is_zero(x) {
                *o = f.add(o, &f.mul(a, x));
            }
        }
    }
    out
}

/// A subspace described by integer data, evaluated over a chosen field.
#[derive(Clone, Debug)]
pub enum SubspaceExpr {
    Span {
        ambient: usize,
        vectors: Vec<Vec<BigInt>>,
    },
    Sum(Box<SubspaceExpr>, Box<SubspaceExpr>),
    Intersection(Box<SubspaceExpr>, Box<SubspaceExpr>),
    Image(IntMatrix, Box<SubspaceExpr>),
    Preimage(IntMatrix, Box<SubspaceExpr>),
}

impl SubspaceExpr {
    pub fn span<T: Into<BigInt> + Clone>(ambient: usize, vectors: &[Vec<T>]) -> Self {
        SubspaceExpr::Span {
            ambient,
            vectors: vectors
                .iter()
                .map(|v| v.iter().cloned().map(Into::into).collect())
                .collect(),
        }
    }

    pub fn sum(self, other: SubspaceExpr) -> Self {
        SubspaceExpr::Sum(Box::new(self), Box::new(other))
    }

    pub fn intersect(self, other: SubspaceExpr) -> Self {
        SubspaceExpr::Intersection(Box::new(self), Box::new(other))
    }

    pub fn image(self, m: IntMatrix) -> Self {
        SubspaceExpr::Image(m, Box::new(self))
    }

    pub fn preimage(self, m: IntMatrix) -> Self {
        SubspaceExpr::Preimage(m, Box::new(self))
    }

    fn eval<F: Field>(&self, f: &F) -> Result<Subspace<F>> {
        match self {
            SubspaceExpr::Span { ambient, vectors } => Subspace::try_span(
                f,
                *ambient,
                vectors
                    .iter()
                    .map(|v| v.iter().map(|x| f.from_int(x)).collect())
                    .collect(),
            ),
            SubspaceExpr::Sum(a, b) => a.eval(f)?.sum(&b.eval(f)?),
            SubspaceExpr::Intersection(a, b) => a.eval(f)?.intersection(&b.eval(f)?),
            SubspaceExpr::Image(m, a) => a.eval(f)?.image(&to_dense(f, m), m.nrows()),
            SubspaceExpr::Preimage(m, a) => a.eval(f)?.preimage(&to_dense(f, m), m.ncols()),
        }
    }
}

/// Dimension of the subspace described by `expr` over a field.
pub fn subspace_dim(expr: &SubspaceExpr, coeff: CoefficientSpec) -> Result<usize> {
    match coeff {
        CoefficientSpec::Integers => Err(Error::FieldRequired(coeff.to_string())),
        CoefficientSpec::Rationals => Ok(expr.eval(&Rationals)?.dim()),
        CoefficientSpec::PrimeField(p) => Ok(expr.eval(&PrimeField::new(p)?)?.dim()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const Q: CoefficientSpec = CoefficientSpec::Rationals;

    #[test]
    fn sum_is_idempotent() {
        let v = SubspaceExpr::span(4, &[vec![1, 2, 0, 0], vec![0, 1, 1, 0]]);
        assert_eq!(subspace_dim(&v.clone().sum(v.clone()), Q).unwrap(), 2);
    }

    #[test]
    fn coordinate_axes_meet_in_zero() {
        let e1 = SubspaceExpr::span(2, &[vec![1, 0]]);
        let e2 = SubspaceExpr::span(2, &[vec![0, 1]]);
        assert_eq!(subspace_dim(&e1.intersect(e2), Q).unwrap(), 0);
    }

    #[test]
    fn image_and_preimage() {
        // projection onto the first coordinate of F^2
        let proj = IntMatrix::from_rows(&[vec![1, 0]]).unwrap();
        let all = SubspaceExpr::span(2, &[vec![1, 0], vec![0, 1]]);
        assert_eq!(subspace_dim(&all.image(proj.clone()), Q).unwrap(), 1);
        let zero = SubspaceExpr::span(1, &Vec::<Vec<i64>>::new());
        // kernel of the projection
        assert_eq!(subspace_dim(&zero.preimage(proj), Q).unwrap(), 1);
    }

    #[test]
    fn ambient_mismatch() {
        let a = SubspaceExpr::span(2, &[vec![1, 0]]);
        let b = SubspaceExpr::span(3, &[vec![1, 0, 0]]);
        assert!(matches!(
            subspace_dim(&a.sum(b), Q),
            Err(Error::DimensionMismatch { .. })
        ));
        let bad = SubspaceExpr::span(2, &[vec![1, 0, 0]]);
        assert!(subspace_dim(&bad, Q).is_err());
    }

    #[test]
    fn mod_two_intersection() {
        // (1,1) and (1,-1) coincide over F_2
        let a = SubspaceExpr::span(2, &[vec![1, 1]]);
        let b = SubspaceExpr::span(2, &[vec![1, -1]]);
        assert_eq!(subspace_dim(&a.clone().intersect(b.clone()), CoefficientSpec::PrimeField(2)).unwrap(), 1);
        assert_eq!(subspace_dim(&a.intersect(b), Q).unwrap(), 0);
    }
}
