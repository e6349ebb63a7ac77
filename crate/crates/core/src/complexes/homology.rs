use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::SimplicialComplex;
use crate::algebra::CoefficientSpec;
use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^free_rank + Z/t1 + Z/t2 + ...` with `t1 | t2 | ...`.
///
/// Two groups are isomorphic exactly when they compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize)]
pub struct HomologyGroup {
    pub free_rank: usize,
    #[serde(serialize_with = "crate::serde_util::bigints")]
    pub torsion: Vec<BigInt>,
}

impl HomologyGroup {
    /// Drops unit coefficients; `torsion` must already be a divisibility chain.
    pub fn new(free_rank: usize, torsion: Vec<BigInt>) -> Self {
        let torsion: Vec<BigInt> = torsion.into_iter().filter(|t| !t.is_one()).collect();
        debug_assert!(torsion.windows(2).all(|w| (&w[1] % &w[0]) == BigInt::from(0)));
        HomologyGroup { free_rank, torsion }
    }

    pub fn free(rank: usize) -> Self {
        HomologyGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Entry `j` of a degree-indexed list, treating absent degrees as zero.
    pub fn at(groups: &[HomologyGroup], j: usize) -> HomologyGroup {
        groups.get(j).cloned().unwrap_or_default()
    }
}

impl fmt::Display for HomologyGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" + "))
    }
}

/// Whether the reduced integral homology of `k` vanishes in degrees `0..=up_to`.
///
/// The empty complex is rejected rather than assigned a convention.
pub fn is_homologically_trivial(k: &SimplicialComplex, up_to: usize) -> Result<bool> {
    if k.is_empty() {
        return Err(Error::EmptyComplex);
    }
    let h = k.skeleton(up_to + 1).homology(CoefficientSpec::Integers, true);
    Ok(h.iter().take(up_to + 1).all(HomologyGroup::is_zero))
}
