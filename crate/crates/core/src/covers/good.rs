use serde::Serialize;

use super::Cover;
use crate::algebra::CoefficientSpec;
use crate::complexes::{HomologyGroup, Simplex};

/// A nonempty intersection `U_sigma` with nonvanishing reduced homology in some degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub sigma: Simplex,
    pub degree: usize,
    pub group: HomologyGroup,
}

/// Nonzero reduced integral homology of `U_sigma` for nerve simplices up to `max_nerve_dim`.
/// `degree_bound(dim sigma)` is the top degree inspected, `None` skips the simplex.
pub(crate) fn reduced_violations(
    cover: &Cover,
    max_nerve_dim: usize,
    degree_bound: impl Fn(usize) -> Option<usize>,
) -> Vec<Violation> {
    let nerve = cover.nerve(Some(max_nerve_dim));
    let mut out = Vec::new();
    for sigma in nerve.iter() {
        let d = sigma.len() - 1;
        let Some(up_to) = degree_bound(d) else { continue };
        let piece = cover.intersection(sigma).expect("nerve labels belong to the cover");
        let h = piece
            .skeleton(up_to + 1)
            .homology(CoefficientSpec::Integers, true);
        for (j, g) in h.into_iter().enumerate().take(up_to + 1) {
            if !g.is_zero() {
                out.push(Violation {
                    sigma: sigma.clone(),
                    degree: j,
                    group: g,
                });
            }
        }
    }
    out
}

/// Intersections of at most `n` parts whose reduced homology is nonzero in a degree
/// `<= up_to`. An empty result means the cover is homologically good up to level `n`.
pub fn good_up_to_level(cover: &Cover, n: usize, up_to: usize) -> Vec<Violation> {
    if n == 0 {
        return Vec::new();
    }
    reduced_violations(cover, n - 1, |_| Some(up_to))
}
