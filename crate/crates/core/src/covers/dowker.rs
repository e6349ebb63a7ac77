use std::collections::{BTreeMap, BTreeSet};

use crate::complexes::{SimplicialComplex, Simplex, VertexId};
use crate::error::{Error, Result};

/// A binary relation between row labels and column labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DowkerRelation {
    rows: Vec<VertexId>,
    cols: Vec<VertexId>,
    pairs: BTreeSet<(VertexId, VertexId)>,
}

impl DowkerRelation {
    pub fn new(
        rows: Vec<VertexId>,
        cols: Vec<VertexId>,
        pairs: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self> {
        let row_set: BTreeSet<&VertexId> = rows.iter().collect();
        let col_set: BTreeSet<&VertexId> = cols.iter().collect();
        if row_set.len() != rows.len() || col_set.len() != cols.len() {
            return Err(Error::DuplicateLabel("relation label".into()));
        }
        let pairs: BTreeSet<(VertexId, VertexId)> = pairs.into_iter().collect();
        for (r, c) in &pairs {
            if !row_set.contains(r) {
                return Err(Error::UndeclaredLabel(r.to_string()));
            }
            if !col_set.contains(c) {
                return Err(Error::UndeclaredLabel(c.to_string()));
            }
        }
        Ok(DowkerRelation { rows, cols, pairs })
    }

    pub fn rows(&self) -> &[VertexId] {
        &self.rows
    }

    pub fn cols(&self) -> &[VertexId] {
        &self.cols
    }

    pub fn pairs(&self) -> &BTreeSet<(VertexId, VertexId)> {
        &self.pairs
    }

    pub fn transpose(&self) -> DowkerRelation {
        DowkerRelation {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            pairs: self.pairs.iter().map(|(r, c)| (c.clone(), r.clone())).collect(),
        }
    }

    /// Complex on the row labels: a set of rows spans a simplex iff one column relates to all of them.
    fn row_complex(&self, max_dim: Option<usize>) -> SimplicialComplex {
        let mut by_col: BTreeMap<&VertexId, Vec<VertexId>> = BTreeMap::new();
        for (r, c) in &self.pairs {
            by_col.entry(c).or_default().push(r.clone());
        }
        let witnesses = by_col
            .into_values()
            .map(|rows| Simplex::from_vertices(rows).expect("pairs are a set"));
        SimplicialComplex::closure_up_to(witnesses, max_dim)
    }
}

/// The two Dowker complexes of a relation: `(on rows, on columns)`.
///
/// For the membership relation of a cover these are the Vietoris complex and the nerve.
pub fn dowker_pair(
    rel: &DowkerRelation,
    max_dim: Option<usize>,
) -> (SimplicialComplex, SimplicialComplex) {
    (rel.row_complex(max_dim), rel.transpose().row_complex(max_dim))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[&str]) -> Vec<VertexId> {
        v.iter().map(|s| VertexId::new(s).unwrap()).collect()
    }

    fn rel(rows: &[&str], cols: &[&str], pairs: &[(&str, &str)]) -> DowkerRelation {
        DowkerRelation::new(
            ids(rows),
            ids(cols),
            pairs
                .iter()
                .map(|(r, c)| (VertexId::new(r).unwrap(), VertexId::new(c).unwrap())),
        )
        .unwrap()
    }

    #[test]
    fn full_relation_gives_simplices() {
        let rows = ["0", "1", "2"];
        let cols = ["a", "b"];
        let pairs: Vec<(&str, &str)> = rows
            .iter()
            .flat_map(|r| cols.iter().map(move |c| (*r, *c)))
            .collect();
        let (x, y) = dowker_pair(&rel(&rows, &cols, &pairs), None);
        assert_eq!(x, SimplicialComplex::full_simplex(ids(&rows)));
        assert_eq!(y, SimplicialComplex::full_simplex(ids(&cols)));
    }

    #[test]
    fn empty_relation() {
        let (x, y) = dowker_pair(&rel(&["x"], &["A"], &[]), None);
        assert!(x.is_empty() && y.is_empty());
    }

    #[test]
    fn path_relation() {
        let r = rel(
            &["x", "y", "z"],
            &["A", "B"],
            &[("x", "A"), ("y", "A"), ("y", "B"), ("z", "B")],
        );
        let (x, y) = dowker_pair(&r, None);
        assert_eq!(x, SimplicialComplex::closure([["x", "y"], ["y", "z"]]).unwrap());
        assert_eq!(y, SimplicialComplex::closure([["A", "B"]]).unwrap());
    }

    #[test]
    fn undeclared_labels_rejected() {
        let r = DowkerRelation::new(
            ids(&["x"]),
            ids(&["A"]),
            [(VertexId::new("x").unwrap(), VertexId::new("B").unwrap())],
        );
        assert_eq!(r, Err(Error::UndeclaredLabel("B".into())));
    }
}
