use serde::Serialize;

use super::gmap::g_commutes;
use crate::algebra::{snf, to_dense, CoefficientSpec, Rationals, Subspace};
use crate::complexes::HomologyGroup;
use crate::covers::{reduced_violations, Cover, Violation};
use crate::error::{Error, Result};
use crate::mvss::{build_double_complex, e_infinity, ss_pages, BottomRow, Filtration};

/// Outcome of the hypothesis check at level `k`: every `sigma` in the
/// `k`-skeleton of the nerve needs `H~_j(U_sigma) = 0` for `j <= k - dim sigma`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HypothesisReport {
    pub k: usize,
    pub passed: bool,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Conclusion2 {
    /// `H_{k+1}(N) = 0`.
    Vacuous,
    /// Both `H_{k+1}(N)` and `H_{k+1}(X)` are nonzero.
    Confirmed,
    /// `H_{k+1}(N) != 0` but `H_{k+1}(X) = 0`.
    Violated,
}

/// Internal steps of the proof, reproduced on the instance.
///
/// Degree-indexed vectors run over `m = 0..=k+1` unless noted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProofTrace {
    /// `E^2_{m,0}`: integral homology of the bottom row.
    pub e2_bottom: Vec<HomologyGroup>,
    /// `E^2_{m,0} = H_m(N)` over the integers, for `m <= k`.
    pub e2_matches_nerve: Vec<bool>,
    /// `g_m` is square with unit invariant factors, for `m <= k`.
    pub g_iso: Vec<bool>,
    pub g_chain_map: bool,
    /// Rank over Q of the map `E^2_{m,0} -> H_m(N)` induced by `g`.
    pub induced_rank: Vec<usize>,
    /// `dim H_m(N; Q)`.
    pub nerve_betti: Vec<usize>,
    /// The degree `k+1` induced map is onto `H_{k+1}(N; Q)`.
    pub surjective_k1: bool,
    /// `dim E^2_{m,0}` read off the column spectral sequence pages over Q.
    pub e2_page_dims: Vec<usize>,
    /// Page dimensions agree with the bottom-row homology.
    pub e2_page_agrees: bool,
    /// `E^2 = E^infinity` (dimensions over Q) on antidiagonals `<= k` and at `(k+1, 0)`.
    pub e2_is_limit: bool,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub k: usize,
    pub hypothesis: HypothesisReport,
    /// `H_j(X)` for `j = 0..=k+1`.
    pub h_base: Vec<HomologyGroup>,
    /// `H_j(N)` for `j = 0..=k+1`.
    pub h_nerve: Vec<HomologyGroup>,
    /// `H_j(X) = H_j(N)` for `j = 0..=k`.
    pub conclusion1: Vec<bool>,
    pub conclusion2: Conclusion2,
    pub proof_trace: Option<ProofTrace>,
}

/// Enumerates the nerve's `k`-skeleton and records every nonvanishing
/// `H~_j(U_sigma)` with `j <= k - dim sigma`.
pub fn check_hypotheses(cover: &Cover, k: usize) -> HypothesisReport {
    let violations = reduced_violations(cover, k, |d| k.checked_sub(d));
    HypothesisReport {
        k,
        passed: violations.is_empty(),
        violations,
    }
}

fn degrees(groups: &[HomologyGroup], top: usize) -> Vec<HomologyGroup> {
    (0..=top).map(|j| HomologyGroup::at(groups, j)).collect()
}

/// Checks the theorem at level `k` on `cover`.
///
/// Conclusions are compared over the integers by Smith normal form on both
/// sides. If the hypotheses hold and a conclusion fails the result is
/// [`Error::TheoremFalsified`], which can only indicate a bug here.
pub fn check_theorem(cover: &Cover, k: usize, with_trace: bool) -> Result<TheoremReport> {
    const Z: CoefficientSpec = CoefficientSpec::Integers;
    let hypothesis = check_hypotheses(cover, k);
    // degrees <= k+1 only see the (k+2)-skeleton
    let h_base = degrees(&cover.base().skeleton(k + 2).homology(Z, false), k + 1);
    let nerve = cover.nerve(Some(k + 2));
    let h_nerve = degrees(&nerve.homology(Z, false), k + 1);
    let conclusion1: Vec<bool> = (0..=k).map(|j| h_base[j] == h_nerve[j]).collect();
    let conclusion2 = match (h_nerve[k + 1].is_zero(), h_base[k + 1].is_zero()) {
        (true, _) => Conclusion2::Vacuous,
        (false, false) => Conclusion2::Confirmed,
        (false, true) => Conclusion2::Violated,
    };
    if hypothesis.passed {
        if let Some(j) = conclusion1.iter().position(|ok| !ok) {
            return Err(Error::TheoremFalsified {
                k,
                detail: format!("H_{j}(X) = {} but H_{j}(N) = {}", h_base[j], h_nerve[j]),
            });
        }
        if conclusion2 == Conclusion2::Violated {
            return Err(Error::TheoremFalsified {
                k,
                detail: format!("H_{}(N) = {} but H_{}(X) = 0", k + 1, h_nerve[k + 1], k + 1),
            });
        }
    }
    let proof_trace = if with_trace {
        Some(trace(cover, k, hypothesis.passed, &h_nerve)?)
    } else {
        None
    };
    Ok(TheoremReport {
        k,
        hypothesis,
        h_base,
        h_nerve,
        conclusion1,
        conclusion2,
        proof_trace,
    })
}

/// Rank over Q of the map on degree-`m` homology induced by `g`, and `dim H_m(N; Q)`.
fn induced_rank(row: &BottomRow, m: usize) -> (usize, usize) {
    let f = Rationals;
    let nerve = row.nerve();
    let cm = nerve.count(m);
    let d1 = row.complex().boundary(m);
    let cycles_e1 = Subspace::zero(&f, d1.nrows())
        .preimage(&to_dense(&f, &d1), row.basis(m).len())
        .expect("bottom row shape");
    let g = to_dense(&f, &row.g_map(m));
    let image = cycles_e1.image(&g, cm).expect("g_m shape");
    let dn_next = to_dense(&f, &nerve.boundary_matrix(m + 1, false));
    let boundaries = Subspace::full(&f, nerve.count(m + 1))
        .image(&dn_next, cm)
        .expect("boundary shape");
    let dn = nerve.boundary_matrix(m, false);
    let cycles_n = Subspace::zero(&f, dn.nrows())
        .preimage(&to_dense(&f, &dn), cm)
        .expect("boundary shape");
    let rank = image.sum(&boundaries).expect("same ambient").dim() - boundaries.dim();
    (rank, cycles_n.dim() - boundaries.dim())
}

fn trace(cover: &Cover, k: usize, hypothesis: bool, h_nerve: &[HomologyGroup]) -> Result<ProofTrace> {
    let top = k + 2;
    let double = build_double_complex(cover, top, top);
    let row = double.e1_bottom_row();

    let e2_bottom = degrees(&row.complex().homology(CoefficientSpec::Integers), k + 1);
    let e2_matches_nerve: Vec<bool> = (0..=k).map(|m| e2_bottom[m] == h_nerve[m]).collect();
    let g_iso: Vec<bool> = (0..=k)
        .map(|m| {
            let g = row.g_map(m);
            let f = snf(&g);
            g.nrows() == g.ncols() && f.rank() == g.nrows() && f.all_units()
        })
        .collect();
    let g_chain_map = g_commutes(&row, top);
    let (induced, nerve_betti): (Vec<usize>, Vec<usize>) =
        (0..=k + 1).map(|m| induced_rank(&row, m)).unzip();
    let surjective_k1 = induced[k + 1] == nerve_betti[k + 1];

    let q = CoefficientSpec::Rationals;
    let pages = ss_pages(&double, Filtration::First, q, 2)?;
    let e2 = &pages[2];
    let e2_page_dims: Vec<usize> = (0..=k + 1).map(|m| e2.dim(m, 0)).collect();
    let bottom_betti: Vec<usize> = degrees(&row.complex().homology(q), k + 1)
        .iter()
        .map(|g| g.free_rank)
        .collect();
    let e2_page_agrees = e2_page_dims == bottom_betti;
    let limit = e_infinity(&double, Filtration::First, q)?;
    let low = (0..=k).all(|n| (0..=n).all(|p| e2.dim(p, n - p) == limit.dim(p, n - p)));
    let e2_is_limit = low && e2.dim(k + 1, 0) == limit.dim(k + 1, 0);

    let unconditional = g_chain_map && e2_page_agrees;
    let conditional = e2_matches_nerve.iter().all(|&b| b)
        && g_iso.iter().all(|&b| b)
        && induced[..=k] == nerve_betti[..=k]
        && surjective_k1
        && e2_is_limit;
    Ok(ProofTrace {
        e2_bottom,
        e2_matches_nerve,
        g_iso,
        g_chain_map,
        induced_rank: induced,
        nerve_betti,
        surjective_k1,
        e2_page_dims,
        e2_page_agrees,
        e2_is_limit,
        passed: unconditional && (!hypothesis || conditional),
    })
}
