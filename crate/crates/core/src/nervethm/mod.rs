//! Hypothesis and conclusion checks for the homological nerve theorem, plus
//! a trace of the proof: the augmentation map `g` from the bottom row of the
//! column spectral sequence to the chains of the nerve, and the `E^2`
//! identifications it induces.

mod gmap;
mod theorem;

pub use gmap::{check_g_chain_map, g_commutes, g_map};
pub use theorem::{check_hypotheses, check_theorem, Conclusion2, HypothesisReport, ProofTrace, TheoremReport};
