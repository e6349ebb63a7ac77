//! Readers for the complex, cover and point-cloud file formats.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use homnerve::{Cover, FiniteMetricSpace, SimplicialComplex, VertexId};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::Failure;

/// A vertex label as written in a file: either a string or a non-negative integer.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Label {
    Int(u64),
    Str(String),
}

impl Label {
    fn text(&self) -> String {
        match self {
            Label::Int(n) => n.to_string(),
            Label::Str(s) => s.clone(),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    #[serde(default)]
    pub name: String,
    pub maximal_simplices: Vec<Vec<Label>>,
}

/// Output shape of a complex document. Labels are always written as strings.
#[derive(Debug, Serialize)]
pub struct ComplexDoc {
    pub name: String,
    pub maximal_simplices: Vec<Vec<String>>,
}

impl ComplexDoc {
    pub fn new(name: impl Into<String>, k: &SimplicialComplex) -> Self {
        ComplexDoc {
            name: name.into(),
            maximal_simplices: k
                .maximal_simplices()
                .iter()
                .map(|s| s.vertices().iter().map(|v| v.as_str().to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum ComplexRef {
    Inline(ComplexFile),
    Path(String),
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoverFile {
    complex: ComplexRef,
    parts: BTreeMap<String, Vec<Vec<Label>>>,
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))
}

fn closure(lists: &[Vec<Label>]) -> Result<SimplicialComplex, Failure> {
    let lists: Vec<Vec<String>> = lists.iter().map(|s| s.iter().map(Label::text).collect()).collect();
    SimplicialComplex::closure(lists).map_err(Failure::from)
}

pub fn load_complex(path: &Path) -> Result<(String, SimplicialComplex), Failure> {
    let text = read(path)?;
    let file: ComplexFile =
        serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let k = closure(&file.maximal_simplices)?;
    Ok((file.name, k))
}

pub fn load_cover(path: &Path) -> Result<Cover, Failure> {
    let text = read(path)?;
    let file: CoverFile =
        serde_json::from_str(&text).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let base = match &file.complex {
        ComplexRef::Inline(c) => closure(&c.maximal_simplices)?,
        ComplexRef::Path(p) => {
            let mut full = PathBuf::from(p);
            if full.is_relative() {
                full = path.parent().unwrap_or(Path::new(".")).join(full);
            }
            load_complex(&full)?.1
        }
    };
    let parts = file
        .parts
        .iter()
        .map(|(label, lists)| Ok((VertexId::new(label)?, closure(lists)?)))
        .collect::<Result<Vec<_>, Failure>>()?;
    Cover::new(base, parts).map_err(Failure::from)
}

/// Parses an integer, a decimal such as `1.25`, or a fraction such as `5/4`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n.trim().parse().ok()?, d));
    }
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    let digits = |t: &str| t.chars().all(|c| c.is_ascii_digit());
    if (int.is_empty() && frac.is_empty()) || !digits(int) || !digits(frac) {
        return None;
    }
    let mut value = BigRational::from_integer(format!("0{int}").parse().ok()?);
    if !frac.is_empty() {
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        value += BigRational::new(frac.parse().ok()?, scale);
    }
    Some(if neg { -value } else { value })
}

fn tokens(line: &str) -> Vec<&str> {
    line.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()).collect()
}

/// Reads a points file.
///
/// Lines are whitespace or comma separated and `#` starts a comment. If the first
/// data line is the word `matrix`, each following line is `label d_1 ... d_n`
/// giving one row of a symmetric distance matrix. Otherwise each line is a point,
/// optionally preceded by a non-numeric label; unlabeled points are named by
/// their zero-based line index.
pub fn load_points(path: &Path) -> Result<FiniteMetricSpace, Failure> {
    let text = read(path)?;
    let lines: Vec<(usize, Vec<&str>)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, tokens(l.split('#').next().unwrap_or(""))))
        .filter(|(_, t)| !t.is_empty())
        .collect();
    let bad = |line: usize, msg: &str| Failure::input(format!("{}:{line}: {msg}", path.display()));
    let number = |line: usize, t: &str| parse_rational(t).ok_or_else(|| bad(line, &format!("not a number: {t:?}")));

    let matrix_form = lines.first().is_some_and(|(_, t)| t.len() == 1 && t[0].eq_ignore_ascii_case("matrix"));
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    if matrix_form {
        for (line, t) in &lines[1..] {
            labels.push(VertexId::new(t[0]).map_err(|e| bad(*line, &e.to_string()))?);
            rows.push(t[1..].iter().map(|x| number(*line, x)).collect::<Result<Vec<_>, _>>()?);
        }
        return FiniteMetricSpace::from_matrix(labels, rows).map_err(Failure::from);
    }
    for (i, (line, t)) in lines.iter().enumerate() {
        let (label, coords) = match parse_rational(t[0]) {
            Some(_) => (i.to_string(), &t[..]),
            None => (t[0].to_string(), &t[1..]),
        };
        if coords.is_empty() {
            return Err(bad(*line, "point has no coordinates"));
        }
        labels.push(VertexId::new(label).map_err(|e| bad(*line, &e.to_string()))?);
        rows.push(coords.iter().map(|x| number(*line, x)).collect::<Result<Vec<_>, _>>()?);
    }
    FiniteMetricSpace::from_coordinates(labels, rows).map_err(Failure::from)
}

pub fn positive_rational(s: &str) -> Result<BigRational, String> {
    match parse_rational(s) {
        Some(r) if r > BigRational::zero() => Ok(r),
        Some(_) => Err("radius must be positive".into()),
        None => Err(format!("not a rational number: {s:?}")),
    }
}
