use std::collections::{BTreeMap, BTreeSet};

use crate::complexes::{SimplicialComplex, Simplex, VertexId};
use crate::error::{Error, Result};

use super::DowkerRelation;

/// A labeled family of subcomplexes whose union is the whole base complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cover {
    base: SimplicialComplex,
    parts: BTreeMap<VertexId, SimplicialComplex>,
}

impl Cover {
    /// Validates that every part is a subcomplex and that every base simplex is covered.
    pub fn new(
        base: SimplicialComplex,
        parts: impl IntoIterator<Item = (VertexId, SimplicialComplex)>,
    ) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (label, part) in parts {
            if let Some(s) = part.iter().find(|s| !base.contains(s)) {
                return Err(Error::NotSubcomplex {
                    part: label.to_string(),
                    simplex: s.clone(),
                });
            }
            if map.insert(label.clone(), part).is_some() {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
        }
        let uncovered: Vec<Simplex> = base
            .maximal_simplices()
            .into_iter()
            .filter(|s| !map.values().any(|p| p.contains(s)))
            .collect();
        if !uncovered.is_empty() {
            return Err(Error::Uncovered(uncovered));
        }
        Ok(Cover { base, parts: map })
    }

    /// Builds each part as the closure of its maximal simplices.
    pub fn from_maximal<L, I, T, S>(base: SimplicialComplex, parts: I) -> Result<Self>
    where
        L: AsRef<str>,
        I: IntoIterator<Item = (L, Vec<T>)>,
        T: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let parts = parts
            .into_iter()
            .map(|(l, m)| Ok((VertexId::new(l)?, SimplicialComplex::closure(m)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, parts)
    }

    pub fn base(&self) -> &SimplicialComplex {
        &self.base
    }

    pub fn parts(&self) -> &BTreeMap<VertexId, SimplicialComplex> {
        &self.parts
    }

    pub fn labels(&self) -> impl Iterator<Item = &VertexId> {
        self.parts.keys()
    }

    pub fn part(&self, label: &VertexId) -> Result<&SimplicialComplex> {
        self.parts
            .get(label)
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    /// `U_sigma`: the simplices common to every named part.
    pub fn intersection(&self, sigma: &Simplex) -> Result<SimplicialComplex> {
        let mut labels = sigma.vertices().iter();
        let first = labels.next().ok_or(Error::EmptySigma)?;
        let mut acc = self.part(first)?.clone();
        for l in labels {
            let p = self.part(l)?;
            if !acc.is_empty() {
                acc = acc.intersection(p);
            }
        }
        Ok(acc)
    }

    /// Labels of the parts containing `s`, as a simplex on the label set.
    pub fn labels_containing(&self, s: &Simplex) -> Simplex {
        Simplex::from_sorted(
            self.parts
                .iter()
                .filter(|(_, p)| p.contains(s))
                .map(|(l, _)| l.clone())
                .collect(),
        )
    }

    /// The nerve: `sigma` is a simplex iff `U_sigma` is nonempty. Truncated to `max_dim` when given.
    pub fn nerve(&self, max_dim: Option<usize>) -> SimplicialComplex {
        // U_sigma is nonempty iff it contains a vertex
        let witnesses: BTreeSet<Simplex> = self
            .base
            .simplices(0)
            .iter()
            .map(|v| self.labels_containing(v))
            .filter(|s| !s.is_empty())
            .collect();
        SimplicialComplex::closure_up_to(witnesses, max_dim)
    }

    /// Membership relation "vertex x lies in part i" (rows: base vertices, columns: labels).
    pub fn membership_relation(&self) -> DowkerRelation {
        let rows: Vec<VertexId> = self.base.vertices().cloned().collect();
        let cols: Vec<VertexId> = self.parts.keys().cloned().collect();
        let pairs: Vec<(VertexId, VertexId)> = self
            .parts
            .iter()
            .flat_map(|(l, p)| p.vertices().map(move |v| (v.clone(), l.clone())))
            .collect();
        DowkerRelation::new(rows, cols, pairs).expect("labels come from the cover")
    }
}
