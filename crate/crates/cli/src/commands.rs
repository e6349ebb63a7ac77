use std::path::Path;

use homnerve::covers::dowker_pair;
use homnerve::mvss::{e1_bottom_row, e_infinity, row_homology, ss_pages, DoubleComplex, Filtration};
use homnerve::nervethm::{check_g_chain_map, check_theorem, Conclusion2};
use homnerve::{vietoris_rips, CoefficientSpec, HomologyGroup, SimplicialComplex};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::input::{load_complex, load_cover, load_points, ComplexDoc};
use crate::{Failure, Mode, Report};

#[derive(Serialize)]
struct Degree {
    degree: usize,
    free_rank: usize,
    #[serde(serialize_with = "bigints")]
    torsion: Vec<BigInt>,
}

fn bigints<S: serde::Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|t| match i64::try_from(t) {
        Ok(n) => serde_json::Value::from(n),
        Err(_) => serde_json::Value::from(t.to_string()),
    }))
}

#[derive(Serialize)]
struct HomologyDoc {
    coeff: String,
    reduced: bool,
    degrees: Vec<Degree>,
}

impl HomologyDoc {
    fn new(groups: &[HomologyGroup], coeff: CoefficientSpec, reduced: bool) -> Self {
        let mut degrees: Vec<Degree> = groups
            .iter()
            .enumerate()
            .map(|(degree, g)| Degree { degree, free_rank: g.free_rank, torsion: g.torsion.clone() })
            .collect();
        if degrees.is_empty() {
            degrees.push(Degree { degree: 0, free_rank: 0, torsion: Vec::new() });
        }
        HomologyDoc { coeff: coeff.to_string(), reduced, degrees }
    }
}

fn describe(groups: &[HomologyGroup]) -> String {
    if groups.is_empty() {
        return "H_0 = 0".into();
    }
    groups.iter().enumerate().map(|(j, g)| format!("H_{j} = {g}")).collect::<Vec<_>>().join(", ")
}

pub fn homology(path: &Path, coeff: CoefficientSpec, reduced: bool) -> Result<Report, Failure> {
    let (_, k) = load_complex(path)?;
    let h = k.homology(coeff, reduced);
    Ok(Report::new(&HomologyDoc::new(&h, coeff, reduced), describe(&h), true))
}

fn stem(path: &Path) -> String {
    path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default()
}

pub fn nerve(path: &Path, max_dim: Option<usize>) -> Result<Report, Failure> {
    let cover = load_cover(path)?;
    let n = cover.nerve(max_dim);
    let summary = format!("nerve: {} simplices, dimension {}", n.len(), n.dim());
    Ok(Report::new(&ComplexDoc::new(format!("nerve of {}", stem(path)), &n), summary, true))
}

#[derive(Serialize)]
struct RipsDoc {
    r: String,
    max_dim: usize,
    complex: ComplexDoc,
    homology: HomologyDoc,
}

pub fn rips(path: &Path, r: &BigRational, max_dim: usize) -> Result<Report, Failure> {
    let ms = load_points(path)?;
    let k = vietoris_rips(&ms, r, max_dim)?;
    let h = k.homology(CoefficientSpec::Integers, false);
    let doc = RipsDoc {
        r: r.to_string(),
        max_dim,
        complex: ComplexDoc::new(format!("rips of {} at {r}", stem(path)), &k),
        homology: HomologyDoc::new(&h, CoefficientSpec::Integers, false),
    };
    let summary = format!("VR({r}): {} simplices; {}", k.len(), describe(&h));
    Ok(Report::new(&doc, summary, true))
}

pub fn check(
    path: &Path,
    mode: Mode,
    k: usize,
    coeff: Option<CoefficientSpec>,
    trace: bool,
) -> Result<Report, Failure> {
    let cover = load_cover(path)?;
    match mode {
        Mode::Theorem => theorem(&cover, k, trace),
        Mode::Prop1 => prop1(&cover, coeff.unwrap_or(CoefficientSpec::Integers)),
        Mode::Collapse => collapse(&cover, coeff.unwrap_or(CoefficientSpec::Rationals)),
        Mode::Dowker => dowker(&cover, coeff.unwrap_or(CoefficientSpec::Integers)),
        Mode::Gmap => gmap(&cover, k, coeff.unwrap_or(CoefficientSpec::Integers)),
    }
}

fn theorem(cover: &homnerve::Cover, k: usize, trace: bool) -> Result<Report, Failure> {
    let report = check_theorem(cover, k, trace)?;
    let trace_ok = report.proof_trace.as_ref().is_none_or(|t| t.passed);
    let mut summary = if report.hypothesis.passed {
        let c2 = match report.conclusion2 {
            Conclusion2::Vacuous => "vacuous",
            Conclusion2::Confirmed => "confirmed",
            Conclusion2::Violated => "violated",
        };
        format!("k = {k}: hypothesis holds; H_j(X) = H_j(N) for j <= {k}; conclusion 2 {c2}")
    } else {
        let mut s = format!("k = {k}: hypothesis fails ({} violations)", report.hypothesis.violations.len());
        for v in &report.hypothesis.violations {
            s.push_str(&format!("\n  sigma = {}: reduced H_{} = {}", v.sigma, v.degree, v.group));
        }
        s
    };
    if trace {
        summary.push_str(if trace_ok { "\nproof trace: all steps hold" } else { "\nproof trace: a step FAILED" });
    }
    Ok(Report::new(&report, summary, trace_ok))
}

#[derive(Serialize)]
struct Row {
    q: usize,
    simplices: usize,
    homology: Vec<Degree>,
    exact: bool,
}

#[derive(Serialize)]
struct Prop1Doc {
    coeff: String,
    rows: Vec<Row>,
    passed: bool,
}

fn prop1(cover: &homnerve::Cover, coeff: CoefficientSpec) -> Result<Report, Failure> {
    let d = DoubleComplex::full(cover);
    let rows: Vec<Row> = (0..=d.q_max())
        .map(|q| {
            let h = row_homology(&d, q, coeff);
            let simplices = cover.base().count(q);
            let exact = HomologyGroup::at(&h, 0) == HomologyGroup::free(simplices)
                && h.iter().skip(1).all(HomologyGroup::is_zero);
            let homology = HomologyDoc::new(&h, coeff, false).degrees;
            Row { q, simplices, homology, exact }
        })
        .collect();
    let passed = rows.iter().all(|r| r.exact);
    let bad: Vec<String> = rows.iter().filter(|r| !r.exact).map(|r| r.q.to_string()).collect();
    let summary = if passed {
        format!("all {} rows exact in p > 0 over {coeff}", rows.len())
    } else {
        format!("rows not exact: q = {}", bad.join(", "))
    };
    Ok(Report::new(&Prop1Doc { coeff: coeff.to_string(), rows, passed }, summary, passed))
}

#[derive(Serialize)]
struct CollapseDoc {
    coeff: String,
    /// `e2[p][q]` for the second filtration.
    e2: Vec<Vec<usize>>,
    betti: Vec<usize>,
    /// Antidiagonal sums of the first sequence's limit page.
    first_e_infinity_totals: Vec<usize>,
    passed: bool,
}

fn collapse(cover: &homnerve::Cover, coeff: CoefficientSpec) -> Result<Report, Failure> {
    let d = DoubleComplex::full(cover);
    let pages = ss_pages(&d, Filtration::Second, coeff, 2)?;
    let e2 = &pages[2];
    let betti: Vec<usize> = cover.base().homology(coeff, false).iter().map(|g| g.free_rank).collect();
    let b = |q: usize| betti.get(q).copied().unwrap_or(0);
    let first = e_infinity(&d, Filtration::First, coeff)?;
    let totals: Vec<usize> = (0..=d.top_degree()).map(|n| first.antidiagonal(n)).collect();
    let column_ok = (0..=d.q_max()).all(|q| e2.dim(0, q) == b(q));
    let rest_zero = (1..=d.p_max()).all(|p| (0..=d.q_max()).all(|q| e2.dim(p, q) == 0));
    let totals_ok = totals.iter().enumerate().all(|(n, &t)| t == b(n));
    let passed = column_ok && rest_zero && totals_ok;
    let summary = format!(
        "second sequence over {coeff}: E2 zero for p > 0: {}; E2_(0,q) = Betti_q: {}; first sequence totals = Betti: {}",
        verdict(rest_zero),
        verdict(column_ok),
        verdict(totals_ok)
    );
    let doc = CollapseDoc {
        coeff: coeff.to_string(),
        e2: e2.dims.clone(),
        betti,
        first_e_infinity_totals: totals,
        passed,
    };
    Ok(Report::new(&doc, summary, passed))
}

#[derive(Serialize)]
struct DowkerDoc {
    coeff: String,
    vertex_side: HomologyDoc,
    part_side: HomologyDoc,
    passed: bool,
}

fn dowker(cover: &homnerve::Cover, coeff: CoefficientSpec) -> Result<Report, Failure> {
    let rel = cover.membership_relation();
    let (a, b) = dowker_pair(&rel, None);
    let (ha, hb) = (a.homology(coeff, false), b.homology(coeff, false));
    let passed = (0..ha.len().max(hb.len())).all(|j| HomologyGroup::at(&ha, j) == HomologyGroup::at(&hb, j));
    let summary = format!("dowker over {coeff}: [{}] vs [{}]: {}", describe(&ha), describe(&hb), verdict(passed));
    let doc = DowkerDoc {
        coeff: coeff.to_string(),
        vertex_side: HomologyDoc::new(&ha, coeff, false),
        part_side: HomologyDoc::new(&hb, coeff, false),
        passed,
    };
    Ok(Report::new(&doc, summary, passed))
}

#[derive(Serialize)]
struct GmapDoc {
    m_max: usize,
    chain_map: bool,
    coeff: String,
    bottom_row: HomologyDoc,
    nerve: HomologyDoc,
    passed: bool,
}

fn gmap(cover: &homnerve::Cover, k: usize, coeff: CoefficientSpec) -> Result<Report, Failure> {
    let n: &SimplicialComplex = &cover.nerve(None);
    let m_max = (k + 1).max(n.dim().max(0) as usize);
    let chain_map = check_g_chain_map(cover, m_max);
    let row = e1_bottom_row(cover, m_max);
    let hb = row.complex().homology(coeff);
    let hn = n.homology(coeff, false);
    let summary = format!(
        "g_m for m <= {m_max}: chain map {}; bottom row [{}]; nerve [{}]",
        verdict(chain_map),
        describe(&hb),
        describe(&hn)
    );
    let doc = GmapDoc {
        m_max,
        chain_map,
        coeff: coeff.to_string(),
        bottom_row: HomologyDoc::new(&hb, coeff, false),
        nerve: HomologyDoc::new(&hn, coeff, false),
        passed: chain_map,
    };
    Ok(Report::new(&doc, summary, chain_map))
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "ok"
    } else {
        "FAILED"
    }
}
