use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::complexes::{SimplicialComplex, Simplex, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
enum Distances {
    Exact(Vec<Vec<BigRational>>),
    /// Squared Euclidean distances; compared against `r^2`.
    Squared(Vec<Vec<BigRational>>),
}

/// A finite set of labeled points with a symmetric distance.
///
/// The triangle inequality is not checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteMetricSpace {
    points: Vec<VertexId>,
    dist: Distances,
}

impl FiniteMetricSpace {
    /// From an explicit distance matrix: square, symmetric, nonnegative, zero diagonal.
    pub fn from_matrix(points: Vec<VertexId>, matrix: Vec<Vec<BigRational>>) -> Result<Self> {
        check_labels(&points)?;
        let n = points.len();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidMetric(format!("distance matrix must be {n}x{n}")));
        }
        for i in 0..n {
            if !matrix[i][i].is_zero() {
                return Err(Error::InvalidMetric(format!("nonzero diagonal at {}", points[i])));
            }
            for j in 0..n {
                if matrix[i][j].is_negative() {
                    return Err(Error::InvalidMetric("negative distance".into()));
                }
                if matrix[i][j] != matrix[j][i] {
                    return Err(Error::InvalidMetric(format!(
                        "asymmetric entry between {} and {}",
                        points[i], points[j]
                    )));
                }
            }
        }
        Ok(FiniteMetricSpace {
            points,
            dist: Distances::Exact(matrix),
        })
    }

    /// From rational coordinates, using exact squared Euclidean distances.
    pub fn from_coordinates(points: Vec<VertexId>, coords: Vec<Vec<BigRational>>) -> Result<Self> {
        check_labels(&points)?;
        if coords.len() != points.len() {
            return Err(Error::InvalidMetric("one coordinate row per point expected".into()));
        }
        let d = coords.first().map_or(0, Vec::len);
        if coords.iter().any(|c| c.len() != d) {
            return Err(Error::InvalidMetric("points have differing dimensions".into()));
        }
        let sq = coords
            .iter()
            .map(|a| {
                coords
                    .iter()
                    .map(|b| a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum())
                    .collect()
            })
            .collect();
        Ok(FiniteMetricSpace {
            points,
            dist: Distances::Squared(sq),
        })
    }

    pub fn points(&self) -> &[VertexId] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// Whether `d(i, j) < r` for `r > 0`.
    pub fn closer_than(&self, i: usize, j: usize, r: &BigRational) -> bool {
        match &self.dist {
            Distances::Exact(m) => &m[i][j] < r,
            Distances::Squared(m) => m[i][j] < r * r,
        }
    }
}

fn check_labels(points: &[VertexId]) -> Result<()> {
    let mut seen = BTreeSet::new();
    for p in points {
        if !seen.insert(p) {
            return Err(Error::DuplicateLabel(p.to_string()));
        }
    }
    Ok(())
}

/// Vietoris-Rips complex: all point sets of diameter strictly less than `r`, up to `max_dim`.
pub fn vietoris_rips(ms: &FiniteMetricSpace, r: &BigRational, max_dim: usize) -> Result<SimplicialComplex> {
    if !r.is_positive() {
        return Err(Error::NonPositiveRadius);
    }
    let n = ms.len();
    let adj: Vec<Vec<usize>> = (0..n)
        .map(|i| (i + 1..n).filter(|&j| ms.closer_than(i, j, r)).collect())
        .collect();
    let mut out = Vec::new();
    // grow cliques by later-indexed common neighbours
    let mut stack: Vec<(Vec<usize>, Vec<usize>)> =
        (0..n).map(|i| (vec![i], adj[i].clone())).collect();
    while let Some((clique, candidates)) = stack.pop() {
        if clique.len() <= max_dim {
            for &c in &candidates {
                let next: Vec<usize> = candidates
                    .iter()
                    .copied()
                    .filter(|&d| d > c && adj[c].binary_search(&d).is_ok())
                    .collect();
                let mut grown = clique.clone();
                grown.push(c);
                stack.push((grown, next));
            }
        }
        let vs = clique.iter().map(|&i| ms.points[i].clone()).collect();
        out.push(Simplex::from_vertices(vs).expect("point labels are distinct"));
    }
    Ok(SimplicialComplex::from_closed_set(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CoefficientSpec;
    use crate::complexes::HomologyGroup;
    use crate::fixtures::square_corners;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn square_at_1_2_is_a_cycle() {
        let k = vietoris_rips(&square_corners(), &q(6, 5), 2).unwrap();
        assert_eq!((k.count(0), k.count(1), k.count(2)), (4, 4, 0));
        let h = k.homology(CoefficientSpec::Integers, false);
        assert_eq!(h[1], HomologyGroup::free(1));
    }

    #[test]
    fn square_at_1_5_is_a_tetrahedron() {
        let k = vietoris_rips(&square_corners(), &q(3, 2), 3).unwrap();
        assert_eq!(k.len(), 15);
        assert!(k.homology(CoefficientSpec::Integers, true).iter().all(HomologyGroup::is_zero));
    }

    #[test]
    fn small_radius_is_discrete_and_strict() {
        let k = vietoris_rips(&square_corners(), &q(1, 1), 2).unwrap();
        assert_eq!((k.count(0), k.count(1)), (4, 0));
        assert_eq!(
            vietoris_rips(&square_corners(), &q(0, 1), 2),
            Err(Error::NonPositiveRadius)
        );
    }

    #[test]
    fn matrix_validation() {
        let pts: Vec<VertexId> = (0..2).map(VertexId::from).collect();
        let asym = vec![vec![q(0, 1), q(1, 1)], vec![q(2, 1), q(0, 1)]];
        assert!(FiniteMetricSpace::from_matrix(pts.clone(), asym).is_err());
        let ok = vec![vec![q(0, 1), q(1, 1)], vec![q(1, 1), q(0, 1)]];
        let ms = FiniteMetricSpace::from_matrix(pts, ok).unwrap();
        assert_eq!(vietoris_rips(&ms, &q(3, 2), 1).unwrap().count(1), 1);
    }
}
