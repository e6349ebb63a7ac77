use num_bigint::BigInt;

use crate::algebra::IntMatrix;
use crate::covers::Cover;
use crate::mvss::{e1_bottom_row, BottomRow};

impl BottomRow {
    /// `g_m: E^1_{m,0} -> C_m(N)`, summing the components of each `U_sigma`.
    pub fn g_map(&self, m: usize) -> IntMatrix {
        let targets = self.nerve().simplices(m);
        let mut g = IntMatrix::zeros(targets.len(), self.basis(m).len());
        for (c, (sigma, _)) in self.basis(m).iter().enumerate() {
            let r = targets.binary_search(sigma).expect("basis simplex is in the nerve");
            g.set(r, c, BigInt::from(1));
        }
        g
    }
}

/// Matrix of `g_m` from the `(sigma, component)` basis to the `m`-simplices of the nerve.
pub fn g_map(cover: &Cover, m: usize) -> IntMatrix {
    e1_bottom_row(cover, m).g_map(m)
}

/// Whether `g_{m-1} d^1_m = d^N_m g_m` for `1 <= m <= min(m_max, top degree)`.
pub fn g_commutes(row: &BottomRow, m_max: usize) -> bool {
    (1..=m_max.min(row.top_degree())).all(|m| {
        let d1 = row.complex().boundary(m);
        let dn = row.nerve().boundary_matrix(m, false);
        let left = row.g_map(m - 1).try_mul(&d1);
        let right = dn.try_mul(&row.g_map(m));
        matches!((left, right), (Ok(a), Ok(b)) if a == b)
    })
}

/// Whether `g` is a chain map in degrees up to `m_max`.
pub fn check_g_chain_map(cover: &Cover, m_max: usize) -> bool {
    g_commutes(&e1_bottom_row(cover, m_max), m_max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::snf;
    use crate::fixtures::{hexagon_cover, triangle_cover};

    #[test]
    fn connected_pieces_give_identity() {
        let g = g_map(&triangle_cover(), 1);
        assert_eq!(g, IntMatrix::identity(3));
    }

    #[test]
    fn hexagon_edge_sums_two_components() {
        let g = g_map(&hexagon_cover(), 1);
        assert_eq!(g, IntMatrix::from_rows(&[vec![1, 1]]).unwrap());
        // surjective: every invariant factor is a unit and the rank is full
        let f = snf(&g);
        assert!(f.all_units() && f.rank() == g.nrows());
    }

    #[test]
    fn chain_map_holds() {
        assert!(check_g_chain_map(&triangle_cover(), 2));
        assert!(check_g_chain_map(&hexagon_cover(), 1));
    }

    #[test]
    fn flipped_sign_breaks_chain_map() {
        let mut row = e1_bottom_row(&triangle_cover(), 2);
        let d = row.complex_mut().boundary_mut(1).unwrap();
        let (r, c, v) = d.entries().next().map(|(r, c, v)| (r, c, v.clone())).unwrap();
        d.set(r, c, -v);
        assert!(!g_commutes(&row, 2));
    }
}
