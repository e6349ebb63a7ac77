use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A vertex label.
///
/// Labels made only of ASCII digits compare numerically (`"2" < "10"`) and
/// sort before all other labels, which compare lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexId(Arc<str>);

impl VertexId {
    pub fn new(label: impl AsRef<str>) -> Result<Self> {
        let label = label.as_ref();
        if label.is_empty() {
            return Err(Error::EmptyLabel);
        }
        Ok(VertexId(Arc::from(label)))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    fn numeric(&self) -> Option<&str> {
        self.0
            .bytes()
            .all(|b| b.is_ascii_digit())
            .then(|| self.0.trim_start_matches('0'))
    }
}

impl Ord for VertexId {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.numeric(), other.numeric()) {
            (Some(a), Some(b)) => a
                .len()
                .cmp(&b.len())
                .then_with(|| a.cmp(b))
                .then_with(|| self.0.cmp(&other.0)),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => self.0.cmp(&other.0),
        }
    }
}

impl PartialOrd for VertexId {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl Serialize for VertexId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0)
    }
}

impl From<usize> for VertexId {
    fn from(n: usize) -> Self {
        VertexId(Arc::from(n.to_string()))
    }
}

/// An oriented simplex: strictly increasing vertex tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Simplex(Vec<VertexId>);

impl Simplex {
    /// Sorts the vertices; rejects repeats and empty labels.
    pub fn new<I, S>(vertices: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let vs = vertices
            .into_iter()
            .map(VertexId::new)
            .collect::<Result<Vec<_>>>()?;
        Self::from_vertices(vs)
    }

    pub fn from_vertices(mut vs: Vec<VertexId>) -> Result<Self> {
        vs.sort();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex {
                vertex: w[0].to_string(),
            });
        }
        Ok(Simplex(vs))
    }

    /// Caller guarantees `vs` is strictly increasing.
    pub(crate) fn from_sorted(vs: Vec<VertexId>) -> Self {
        debug_assert!(vs.windows(2).all(|w| w[0] < w[1]));
        Simplex(vs)
    }

    pub fn vertex(v: VertexId) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension; `-1` for the empty simplex.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    /// The face `[v0, ..., ^vj, ..., vp]`.
    pub fn face(&self, j: usize) -> Simplex {
        let mut vs = self.0.clone();
        vs.remove(j);
        Simplex(vs)
    }

    /// `(j, face_j)` for every codimension-one face.
    pub fn faces(&self) -> impl Iterator<Item = (usize, Simplex)> + '_ {
        (0..self.0.len()).map(move |j| (j, self.face(j)))
    }

    /// All nonempty subsets, including `self`.
    pub fn subsets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        assert!(n < 64, "simplex too large to enumerate faces");
        (1u64..(1u64 << n)).map(move |mask| {
            Simplex(
                (0..n)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| self.0[i].clone())
                    .collect(),
            )
        })
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        self.0.binary_search(v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|v| other.contains(v))
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    #[test]
    fn numeric_labels_compare_numerically() {
        assert!(v("2") < v("10"));
        assert!(v("10") < v("a"));
        assert!(v("b") < v("c"));
        assert!(v("2") < v("02") || v("02") < v("2"));
        assert_ne!(v("2"), v("02"));
    }

    #[test]
    fn simplex_is_sorted_and_checked() {
        let s = Simplex::new(["c", "a", "b"]).unwrap();
        assert_eq!(s.to_string(), "[a,b,c]");
        assert_eq!(s.dim(), 2);
        assert_eq!(s.face(1).to_string(), "[a,c]");
        assert!(matches!(
            Simplex::new(["a", "b", "a"]),
            Err(Error::RepeatedVertex { .. })
        ));
        assert_eq!(VertexId::new(""), Err(Error::EmptyLabel));
        assert_eq!(s.subsets().count(), 7);
    }
}
