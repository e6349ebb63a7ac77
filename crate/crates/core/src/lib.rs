//! Exact verification of the homological nerve theorem on finite simplicial covers.
//!
//! A space is modelled by a finite [`SimplicialComplex`] and a cover by a
//! [`Cover`] of subcomplexes. The crate builds nerves, Dowker and
//! Vietoris-Rips complexes, the Mayer-Vietoris double complex of a cover with
//! both of its spectral sequences, and checks the nerve theorem together with
//! the intermediate statements of its proof:
//!
//! * rows of the double complex are exact away from the first column,
//! * the row-filtration spectral sequence collapses onto `H_*(X)`,
//! * the augmentation `g: E^1_{*,0} -> C_*(N)` is a chain map, an isomorphism
//!   in low degrees and surjective one degree higher.
//!
//! Integral homology goes through Smith normal form on sparse big-integer
//! matrices; spectral-sequence pages are computed over a field by subspace
//! arithmetic.
//!
//! ```
//! use homnerve::{fixtures, nervethm::check_theorem};
//!
//! let cover = fixtures::triangle_cover();
//! let report = check_theorem(&cover, 1, false).unwrap();
//! assert!(report.hypothesis.passed);
//! assert!(report.conclusion1.iter().all(|&ok| ok));
//! ```

pub mod algebra;
pub mod complexes;
pub mod covers;
mod error;
pub mod fixtures;
pub mod mvss;
pub mod nervethm;
pub mod random;
mod serde_util;

pub use algebra::{snf, CoefficientSpec, IntMatrix, InvariantFactors};
pub use complexes::{ChainComplex, HomologyGroup, Simplex, SimplicialComplex, VertexId};
pub use covers::{dowker_pair, vietoris_rips, Cover, DowkerRelation, FiniteMetricSpace};
pub use error::{Error, Result};
