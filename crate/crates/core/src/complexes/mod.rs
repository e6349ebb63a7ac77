//! Finite simplicial complexes, chain complexes and integral homology.

mod chain;
mod complex;
mod homology;
mod simplex;

pub use chain::ChainComplex;
pub use complex::SimplicialComplex;
pub use homology::{is_homologically_trivial, HomologyGroup};
pub use simplex::{Simplex, VertexId};
