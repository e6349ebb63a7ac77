use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::DoubleComplex;
use crate::algebra::IntMatrix;
use crate::complexes::{ChainComplex, SimplicialComplex, Simplex, VertexId};
use crate::covers::Cover;

/// The bottom row `E^1_{*,0}` of the column-filtration spectral sequence.
///
/// In degree `m` the basis is the pairs `(sigma, c)` with `sigma` an
/// `m`-simplex of the nerve and `c` a path component of `U_sigma`, named by
/// its least vertex. The differential sends a component to the signed sum of
/// the components of `U_{face_i sigma}` containing it.
#[derive(Clone, Debug)]
pub struct BottomRow {
    nerve: SimplicialComplex,
    basis: Vec<Vec<(Simplex, VertexId)>>,
    complex: ChainComplex,
}

impl BottomRow {
    pub(crate) fn from_pieces(nerve: &SimplicialComplex, pieces: &[Vec<SimplicialComplex>]) -> Self {
        let top = pieces.len();
        let reps: Vec<Vec<BTreeMap<VertexId, VertexId>>> = pieces
            .iter()
            .map(|layer| layer.iter().map(SimplicialComplex::component_representatives).collect())
            .collect();
        let basis: Vec<Vec<(Simplex, VertexId)>> = (0..top)
            .map(|m| {
                nerve
                    .simplices(m)
                    .iter()
                    .zip(&reps[m])
                    .flat_map(|(s, map)| {
                        let roots: BTreeSet<&VertexId> = map.values().collect();
                        roots.into_iter().map(move |r| (s.clone(), r.clone()))
                    })
                    .collect()
            })
            .collect();
        let mut boundaries = Vec::with_capacity(top);
        for m in 0..top {
            if m == 0 {
                boundaries.push(IntMatrix::zeros(0, basis[0].len()));
                continue;
            }
            let mut d = IntMatrix::zeros(basis[m - 1].len(), basis[m].len());
            for (c, (sigma, rep)) in basis[m].iter().enumerate() {
                for (i, face) in sigma.faces() {
                    let fi = nerve.index_of(&face).expect("nerve is closed under faces");
                    let target = reps[m - 1][fi][rep].clone();
                    let r = basis[m - 1]
                        .binary_search(&(face, target))
                        .expect("component of the face is a basis element");
                    d.add_at(r, c, &BigInt::from(if i % 2 == 0 { 1 } else { -1 }));
                }
            }
            boundaries.push(d);
        }
        let dims = basis.iter().map(Vec::len).collect();
        BottomRow {
            nerve: nerve.clone(),
            basis,
            complex: ChainComplex::new(dims, boundaries).expect("bottom row shapes are consistent"),
        }
    }

    /// Nerve simplices up to the row's top degree.
    pub fn nerve(&self) -> &SimplicialComplex {
        &self.nerve
    }

    pub fn basis(&self, m: usize) -> &[(Simplex, VertexId)] {
        self.basis.get(m).map_or(&[], Vec::as_slice)
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn complex_mut(&mut self) -> &mut ChainComplex {
        &mut self.complex
    }

    /// Largest degree present.
    pub fn top_degree(&self) -> usize {
        self.basis.len().saturating_sub(1)
    }
}

/// Bottom row in degrees `0..=m_max`.
pub fn e1_bottom_row(cover: &Cover, m_max: usize) -> BottomRow {
    let nerve = cover.nerve(Some(m_max));
    let pieces: Vec<Vec<SimplicialComplex>> = (0..=m_max)
        .map(|m| {
            nerve
                .simplices(m)
                .iter()
                .map(|s| cover.intersection(s).expect("nerve labels belong to the cover"))
                .collect()
        })
        .collect();
    BottomRow::from_pieces(&nerve, &pieces)
}

impl DoubleComplex {
    /// Bottom row in degrees `0..=p_max`, reusing the stored intersections.
    pub fn e1_bottom_row(&self) -> BottomRow {
        BottomRow::from_pieces(self.nerve(), self.pieces())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::CoefficientSpec;
    use crate::complexes::HomologyGroup;
    use crate::fixtures::{hexagon_cover, triangle_cover};

    #[test]
    fn good_cover_ranks_are_simplex_counts() {
        let row = e1_bottom_row(&triangle_cover(), 2);
        assert_eq!(row.complex().dims(), &[3, 3, 0]);
        let h = row.complex().homology(CoefficientSpec::Integers);
        assert_eq!(h[0], HomologyGroup::free(1));
        assert_eq!(h[1], HomologyGroup::free(1));
        assert!(row.complex().is_complex());
    }

    #[test]
    fn hexagon_edge_has_two_components() {
        let row = e1_bottom_row(&hexagon_cover(), 1);
        assert_eq!(row.complex().dims(), &[2, 2]);
        let reps: Vec<&str> = row.basis(1).iter().map(|(_, r)| r.as_str()).collect();
        assert_eq!(reps, vec!["1", "4"]);
    }

    #[test]
    fn matches_double_complex_route() {
        let d = DoubleComplex::full(&hexagon_cover());
        let a = d.e1_bottom_row();
        let b = e1_bottom_row(&hexagon_cover(), d.p_max());
        assert_eq!(a.complex(), b.complex());
    }
}
