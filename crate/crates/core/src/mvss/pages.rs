use std::collections::HashMap;

use serde::Serialize;

use super::{total_complex, DoubleComplex};
use crate::algebra::{to_dense, CoefficientSpec, Field, PrimeField, Rationals, Subspace};
use crate::error::{Error, Result};

/// Which filtration of the total complex drives the spectral sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Filtration {
    /// By columns, `F'_k = sum_{p <= k} A_{p,*}`; `E^1` is the `d''`-homology.
    First,
    /// By rows, `F''_k = sum_{q <= k} A_{*,q}`; `E^1` is the `d'`-homology.
    Second,
}

/// Dimensions of one page, indexed by the double-complex position `(p, q)`.
///
/// Only dimensions are reported; no group presentations or differentials.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PageTable {
    pub r: usize,
    /// `dims[p][q] = dim E^r_{p,q}`.
    pub dims: Vec<Vec<usize>>,
    /// Whether `E^{r+1}` has the same dimensions, i.e. `d^r` vanishes in range.
    pub stable: bool,
}

impl PageTable {
    pub fn dim(&self, p: usize, q: usize) -> usize {
        self.dims.get(p).and_then(|c| c.get(q)).copied().unwrap_or(0)
    }

    /// Sum of the dimensions on the antidiagonal `p + q = n`.
    pub fn antidiagonal(&self, n: usize) -> usize {
        (0..=n).map(|p| self.dim(p, n - p)).sum()
    }
}

/// A total complex over a field, with the filtration level of every coordinate.
struct Filtered<F: Field> {
    field: F,
    /// `levels[n][i]` is the filtration degree of coordinate `i` of `T_n`.
    levels: Vec<Vec<i64>>,
    /// `diff[n]` is the dense matrix of `T_n -> T_{n-1}` (empty for `n = 0`).
    diff: Vec<Vec<Vec<F::Elem>>>,
    cycles: HashMap<(i64, i64, usize), Subspace<F>>,
}

impl<F: Field> Filtered<F> {
    fn new(field: F, d: &DoubleComplex, which: Filtration) -> Result<Self> {
        let tot = total_complex(d)?;
        let levels = (0..=d.top_degree())
            .map(|n| {
                d.total_layout(n)
                    .into_iter()
                    .flat_map(|(p, q, _, len)| {
                        let s = match which {
                            Filtration::First => p,
                            Filtration::Second => q,
                        };
                        std::iter::repeat_n(s as i64, len)
                    })
                    .collect()
            })
            .collect();
        let diff = (0..=d.top_degree())
            .map(|n| to_dense(&field, &tot.boundary(n)))
            .collect();
        Ok(Filtered {
            field,
            levels,
            diff,
            cycles: HashMap::new(),
        })
    }

    fn dim_total(&self, n: usize) -> usize {
        self.levels.get(n).map_or(0, Vec::len)
    }

    /// `F_s T_n`.
    fn filtered(&self, s: i64, n: usize) -> Subspace<F> {
        let lv = self.levels.get(n).map_or(&[][..], Vec::as_slice);
        Subspace::coordinate(
            &self.field,
            lv.len(),
            lv.iter().enumerate().filter(|(_, &l)| l <= s).map(|(i, _)| i),
        )
    }

    /// `Z^r_s = F_s T_n  ∩  d^{-1}(F_{s-r} T_{n-1})`.
    fn cycles(&mut self, r: i64, s: i64, n: usize) -> Subspace<F> {
        if let Some(z) = self.cycles.get(&(r, s, n)) {
            return z.clone();
        }
        let fs = self.filtered(s, n);
        let z = if n == 0 {
            fs
        } else {
            let target = self.filtered(s - r, n - 1);
            let pre = target
                .preimage(&self.diff[n], self.dim_total(n))
                .expect("differential shapes agree");
            fs.intersection(&pre).expect("same ambient space")
        };
        self.cycles.insert((r, s, n), z.clone());
        z
    }

    /// `dim E^r_{s,n-s} = dim(Z^r_s + F_{s-1}) - dim(d Z^{r-1}_{s+r-1} + F_{s-1})`.
    fn page_dim(&mut self, r: i64, s: i64, n: usize) -> usize {
        let below = self.filtered(s - 1, n);
        let z = self.cycles(r, s, n);
        let numerator = z.sum(&below).expect("same ambient space").dim();
        let boundaries = if n + 1 < self.levels.len() {
            let src = self.cycles(r - 1, s + r - 1, n + 1);
            src.image(&self.diff[n + 1], self.dim_total(n))
                .expect("differential shapes agree")
        } else {
            Subspace::zero(&self.field, self.dim_total(n))
        };
        let denominator = boundaries.sum(&below).expect("same ambient space").dim();
        numerator - denominator
    }

    fn page(&mut self, d: &DoubleComplex, which: Filtration, r: usize) -> Vec<Vec<usize>> {
        let mut dims = vec![vec![0; d.q_max() + 1]; d.p_max() + 1];
        for (p, col) in dims.iter_mut().enumerate() {
            for (q, slot) in col.iter_mut().enumerate() {
                let s = match which {
                    Filtration::First => p,
                    Filtration::Second => q,
                };
                *slot = self.page_dim(r as i64, s as i64, p + q);
            }
        }
        dims
    }
}

fn pages_in<F: Field>(
    field: F,
    d: &DoubleComplex,
    which: Filtration,
    rs: impl IntoIterator<Item = usize>,
) -> Result<Vec<PageTable>> {
    let mut f = Filtered::new(field, d, which)?;
    let mut out = Vec::new();
    for r in rs {
        let dims = f.page(d, which, r);
        let next = f.page(d, which, r + 1);
        out.push(PageTable {
            r,
            stable: dims == next,
            dims,
        });
    }
    Ok(out)
}

fn dispatch(
    d: &DoubleComplex,
    which: Filtration,
    coeff: CoefficientSpec,
    rs: Vec<usize>,
) -> Result<Vec<PageTable>> {
    match coeff {
        CoefficientSpec::Integers => Err(Error::FieldRequired(coeff.to_string())),
        CoefficientSpec::Rationals => pages_in(Rationals, d, which, rs),
        CoefficientSpec::PrimeField(p) => pages_in(PrimeField::new(p)?, d, which, rs),
    }
}

/// Pages `E^0 .. E^{r_max}` of the chosen spectral sequence over a field.
///
/// Dimensions come from subspace arithmetic on the filtered total complex.
pub fn ss_pages(
    d: &DoubleComplex,
    which: Filtration,
    field: CoefficientSpec,
    r_max: usize,
) -> Result<Vec<PageTable>> {
    dispatch(d, which, field, (0..=r_max).collect())
}

/// The limit page. The filtration has length at most `max(p_max, q_max) + 1`,
/// so every differential vanishes from that page on.
pub fn e_infinity(d: &DoubleComplex, which: Filtration, field: CoefficientSpec) -> Result<PageTable> {
    let r = d.p_max().max(d.q_max()) + 2;
    Ok(dispatch(d, which, field, vec![r])?.remove(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexes::{SimplicialComplex, VertexId};
    use crate::covers::Cover;
    use crate::fixtures::{hexagon_cover, projective_plane, triangle_cover};

    const Q: CoefficientSpec = CoefficientSpec::Rationals;

    #[test]
    fn first_sequence_on_triangle() {
        let d = DoubleComplex::full(&triangle_cover());
        let pages = ss_pages(&d, Filtration::First, Q, 2).unwrap();
        let e1 = &pages[1];
        assert_eq!((e1.dim(0, 0), e1.dim(1, 0)), (3, 3));
        assert_eq!((e1.dim(0, 1), e1.dim(1, 1)), (0, 0));
        let e2 = &pages[2];
        assert_eq!((e2.dim(0, 0), e2.dim(1, 0)), (1, 1));
        assert!(e2.stable);
    }

    #[test]
    fn second_sequence_collapses_to_base_homology() {
        for cover in [triangle_cover(), hexagon_cover()] {
            let d = DoubleComplex::full(&cover);
            let pages = ss_pages(&d, Filtration::Second, Q, 3).unwrap();
            let betti: Vec<usize> = cover
                .base()
                .homology(Q, false)
                .iter()
                .map(|g| g.free_rank)
                .collect();
            for page in &pages[2..] {
                for q in 0..=d.q_max() {
                    assert_eq!(page.dim(0, q), betti[q]);
                    for p in 1..=d.p_max() {
                        assert_eq!(page.dim(p, q), 0);
                    }
                }
                assert!(page.stable);
            }
        }
    }

    #[test]
    fn single_part_cover_is_one_column() {
        let base = projective_plane();
        let cover = Cover::new(base.clone(), [(VertexId::new("U").unwrap(), base.clone())]).unwrap();
        let d = DoubleComplex::full(&cover);
        let betti: Vec<usize> = base
            .homology(CoefficientSpec::PrimeField(2), false)
            .iter()
            .map(|g| g.free_rank)
            .collect();
        let pages = ss_pages(&d, Filtration::First, CoefficientSpec::PrimeField(2), 3).unwrap();
        for page in &pages[1..] {
            assert_eq!(page.dims[0], betti);
        }
    }

    #[test]
    fn integers_rejected() {
        let d = DoubleComplex::full(&triangle_cover());
        assert!(matches!(
            ss_pages(&d, Filtration::First, CoefficientSpec::Integers, 1),
            Err(Error::FieldRequired(_))
        ));
    }

    #[test]
    fn limit_page_sums_to_betti_numbers() {
        let base = SimplicialComplex::closure([vec!["0", "1", "2"], vec!["2", "3"], vec!["3", "4"], vec!["4", "2"]]).unwrap();
        let cover = Cover::from_maximal(
            base.clone(),
            [
                ("A", vec![vec!["0", "1", "2"], vec!["2", "3"]]),
                ("B", vec![vec!["3", "4"], vec!["4", "2"]]),
            ],
        )
        .unwrap();
        let d = DoubleComplex::full(&cover);
        let betti = base.homology(Q, false);
        for which in [Filtration::First, Filtration::Second] {
            let inf = e_infinity(&d, which, Q).unwrap();
            for (n, g) in betti.iter().enumerate() {
                assert_eq!(inf.antidiagonal(n), g.free_rank, "{which:?} degree {n}");
            }
        }
    }
}
