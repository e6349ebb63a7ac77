use num_bigint::BigInt;

use crate::algebra::{CoefficientSpec, IntMatrix};
use crate::complexes::{ChainComplex, HomologyGroup, SimplicialComplex, Simplex};
use crate::covers::Cover;
use crate::error::{Error, Result};

/// Truncation `0 <= p <= p_max`, `0 <= q <= q_max` of the Mayer-Vietoris double complex.
///
/// Both truncations are subcomplexes, so the total complex agrees with the
/// untruncated one in total degrees below `min(p_max, q_max)`.
#[derive(Clone, Debug)]
pub struct DoubleComplex {
    p_max: usize,
    q_max: usize,
    nerve: SimplicialComplex,
    /// `pieces[p][i]` is `U_sigma` for the `i`-th `p`-simplex of the nerve.
    pieces: Vec<Vec<SimplicialComplex>>,
    basis: Vec<Vec<Vec<(Simplex, Simplex)>>>,
    d_prime: Vec<Vec<IntMatrix>>,
    d_dprime: Vec<Vec<IntMatrix>>,
}

fn sign(i: usize) -> BigInt {
    BigInt::from(if i.is_multiple_of(2) { 1 } else { -1 })
}

/// Builds the double complex with bases in lexicographic `(sigma, tau)` order.
pub fn build_double_complex(cover: &Cover, p_max: usize, q_max: usize) -> DoubleComplex {
    let nerve = cover.nerve(Some(p_max));
    let pieces: Vec<Vec<SimplicialComplex>> = (0..=p_max)
        .map(|p| {
            nerve
                .simplices(p)
                .iter()
                .map(|s| cover.intersection(s).expect("nerve labels belong to the cover"))
                .collect()
        })
        .collect();
    let basis: Vec<Vec<Vec<(Simplex, Simplex)>>> = (0..=p_max)
        .map(|p| {
            (0..=q_max)
                .map(|q| {
                    nerve
                        .simplices(p)
                        .iter()
                        .zip(&pieces[p])
                        .flat_map(|(s, u)| u.simplices(q).iter().map(move |t| (s.clone(), t.clone())))
                        .collect()
                })
                .collect()
        })
        .collect();
    let index = |p: usize, q: usize, pair: &(Simplex, Simplex)| -> usize {
        basis[p][q]
            .binary_search(pair)
            .expect("face pair lies in the double complex")
    };

    let mut d_prime = Vec::with_capacity(p_max + 1);
    let mut d_dprime = Vec::with_capacity(p_max + 1);
    for p in 0..=p_max {
        let mut dp_row = Vec::with_capacity(q_max + 1);
        let mut ddp_row = Vec::with_capacity(q_max + 1);
        for q in 0..=q_max {
            let cols = &basis[p][q];
            let mut dp = IntMatrix::zeros(if p == 0 { 0 } else { basis[p - 1][q].len() }, cols.len());
            let mut ddp = IntMatrix::zeros(if q == 0 { 0 } else { basis[p][q - 1].len() }, cols.len());
            for (c, (sigma, tau)) in cols.iter().enumerate() {
                if p > 0 {
                    // U_sigma lies in U_{face}, so (face, tau) is a basis pair
                    for (i, face) in sigma.faces() {
                        dp.add_at(index(p - 1, q, &(face, tau.clone())), c, &sign(i));
                    }
                }
                if q > 0 {
                    for (j, face) in tau.faces() {
                        ddp.add_at(index(p, q - 1, &(sigma.clone(), face)), c, &sign(j));
                    }
                }
            }
            dp_row.push(dp);
            ddp_row.push(ddp);
        }
        d_prime.push(dp_row);
        d_dprime.push(ddp_row);
    }
    DoubleComplex {
        p_max,
        q_max,
        nerve,
        pieces,
        basis,
        d_prime,
        d_dprime,
    }
}

impl DoubleComplex {
    /// Untruncated double complex: `p_max = dim N`, `q_max = dim X`.
    pub fn full(cover: &Cover) -> Self {
        let p = cover.nerve(None).dim().max(0) as usize;
        let q = cover.base().dim().max(0) as usize;
        build_double_complex(cover, p, q)
    }

    pub fn p_max(&self) -> usize {
        self.p_max
    }

    pub fn q_max(&self) -> usize {
        self.q_max
    }

    /// The nerve, truncated to dimension `p_max`.
    pub fn nerve(&self) -> &SimplicialComplex {
        &self.nerve
    }

    /// `U_sigma` for the `i`-th `p`-simplex of the nerve.
    pub fn piece(&self, p: usize, i: usize) -> &SimplicialComplex {
        &self.pieces[p][i]
    }

    pub(crate) fn pieces(&self) -> &[Vec<SimplicialComplex>] {
        &self.pieces
    }

    pub fn basis(&self, p: usize, q: usize) -> &[(Simplex, Simplex)] {
        self.basis
            .get(p)
            .and_then(|row| row.get(q))
            .map_or(&[], Vec::as_slice)
    }

    /// Rank of `A_{p,q}`.
    pub fn rank(&self, p: usize, q: usize) -> usize {
        self.basis(p, q).len()
    }

    /// `d': A_{p,q} -> A_{p-1,q}`.
    pub fn d_prime(&self, p: usize, q: usize) -> &IntMatrix {
        &self.d_prime[p][q]
    }

    /// `d'': A_{p,q} -> A_{p,q-1}`.
    pub fn d_dprime(&self, p: usize, q: usize) -> &IntMatrix {
        &self.d_dprime[p][q]
    }

    pub fn d_prime_mut(&mut self, p: usize, q: usize) -> &mut IntMatrix {
        &mut self.d_prime[p][q]
    }

    pub fn d_dprime_mut(&mut self, p: usize, q: usize) -> &mut IntMatrix {
        &mut self.d_dprime[p][q]
    }

    /// Blocks of total degree `n` as `(p, q, offset, len)`, in increasing `p`.
    pub fn total_layout(&self, n: usize) -> Vec<(usize, usize, usize, usize)> {
        let mut offset = 0;
        let mut out = Vec::new();
        for p in n.saturating_sub(self.q_max)..=n.min(self.p_max) {
            let q = n - p;
            let len = self.rank(p, q);
            out.push((p, q, offset, len));
            offset += len;
        }
        out
    }

    /// Largest total degree.
    pub fn top_degree(&self) -> usize {
        self.p_max + self.q_max
    }
}

/// Checks `d'd' = 0`, `d''d'' = 0` and `d'd'' = d''d'` exactly.
pub fn check_bicomplex(d: &DoubleComplex) -> bool {
    let zero = |a: &IntMatrix, b: &IntMatrix| a.try_mul(b).map(|m| m.is_zero()).unwrap_or(false);
    for p in 0..=d.p_max {
        for q in 0..=d.q_max {
            if p >= 2 && !zero(&d.d_prime[p - 1][q], &d.d_prime[p][q]) {
                return false;
            }
            if q >= 2 && !zero(&d.d_dprime[p][q - 1], &d.d_dprime[p][q]) {
                return false;
            }
            if p >= 1 && q >= 1 {
                let a = d.d_prime[p][q - 1].try_mul(&d.d_dprime[p][q]);
                let b = d.d_dprime[p - 1][q].try_mul(&d.d_prime[p][q]);
                match (a, b) {
                    (Ok(a), Ok(b)) if a == b => {}
                    _ => return false,
                }
            }
        }
    }
    true
}

/// Total complex with differential `d' + (-1)^p d''` on `A_{p,q}`.
pub fn total_complex(d: &DoubleComplex) -> Result<ChainComplex> {
    if !check_bicomplex(d) {
        return Err(Error::BicomplexViolated);
    }
    let top = d.top_degree();
    let layouts: Vec<_> = (0..=top).map(|n| d.total_layout(n)).collect();
    let dims: Vec<usize> = layouts
        .iter()
        .map(|l| l.iter().map(|b| b.3).sum())
        .collect();
    let mut boundaries = vec![IntMatrix::zeros(0, dims[0])];
    for n in 1..=top {
        let target = &layouts[n - 1];
        let offset_of = |p: usize| target.iter().find(|b| b.0 == p).map(|b| b.2);
        let mut m = IntMatrix::zeros(dims[n - 1], dims[n]);
        for &(p, q, col_off, _) in &layouts[n] {
            if p >= 1 {
                let row_off = offset_of(p - 1).expect("block (p-1, q) exists");
                for (r, c, v) in d.d_prime[p][q].entries() {
                    m.add_at(row_off + r, col_off + c, v);
                }
            }
            if q >= 1 {
                let row_off = offset_of(p).expect("block (p, q-1) exists");
                let s = sign(p);
                for (r, c, v) in d.d_dprime[p][q].entries() {
                    m.add_at(row_off + r, col_off + c, &(v * &s));
                }
            }
        }
        boundaries.push(m);
    }
    ChainComplex::new(dims, boundaries)
}

/// Homology of the row `A_{*,q}` under `d'`, indexed by `p`.
pub fn row_homology(d: &DoubleComplex, q: usize, coeff: CoefficientSpec) -> Vec<HomologyGroup> {
    if q > d.q_max {
        return Vec::new();
    }
    let dims = (0..=d.p_max).map(|p| d.rank(p, q)).collect();
    let bounds = (0..=d.p_max).map(|p| d.d_prime[p][q].clone()).collect();
    ChainComplex::new(dims, bounds)
        .expect("row shapes are consistent")
        .homology(coeff)
}
