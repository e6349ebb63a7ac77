//! Covers by subcomplexes, nerves, Dowker complexes and Vietoris-Rips complexes.

mod cover;
mod dowker;
mod good;
mod rips;

pub use cover::Cover;
pub use dowker::{dowker_pair, DowkerRelation};
pub(crate) use good::reduced_violations;
pub use good::{good_up_to_level, Violation};
pub use rips::{vietoris_rips, FiniteMetricSpace};
