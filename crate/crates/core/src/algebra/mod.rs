//! Exact linear algebra over the integers, the rationals and prime fields.

mod field;
mod linear;
mod matrix;
mod snf;
mod subspace;

pub use field::{CoefficientSpec, Field, PrimeField, Rationals};
pub use linear::{kernel_basis, kernel_basis_in, rank, rank_in, to_dense, Echelon};
pub use matrix::IntMatrix;
pub use snf::{snf, InvariantFactors};
pub use subspace::{subspace_dim, Subspace, SubspaceExpr};
