//! The Mayer-Vietoris double complex of a cover and its two spectral sequences.
//!
//! `A_{p,q}` is the direct sum of `C_q(U_sigma)` over the `p`-simplices `sigma`
//! of the nerve, with basis pairs `(sigma, tau)`. The horizontal differential
//! `d'` is the alternating sum of face inclusions in `sigma`, the vertical one
//! `d''` is the simplicial boundary in `tau`. The two commute, and the total
//! differential on `A_{p,q}` is `d' + (-1)^p d''`.

mod bottom;
mod double;
mod pages;

pub use bottom::{e1_bottom_row, BottomRow};
pub use double::{build_double_complex, check_bicomplex, row_homology, total_complex, DoubleComplex};
pub use pages::{e_infinity, ss_pages, Filtration, PageTable};

use crate::complexes::{SimplicialComplex, Simplex};
use crate::covers::Cover;
use crate::error::{Error, Result};

/// The full simplex on the labels of all parts containing `tau`.
///
/// This is the subcomplex of the nerve on which a chain supported in `tau`
/// lives; it is empty or a cone, so its reduced homology vanishes.
pub fn nf_complex(cover: &Cover, tau: &Simplex) -> Result<SimplicialComplex> {
    if !cover.base().contains(tau) {
        return Err(Error::NotInBase(tau.clone()));
    }
    Ok(SimplicialComplex::full_simplex(
        cover.labels_containing(tau).vertices().iter().cloned(),
    ))
}
