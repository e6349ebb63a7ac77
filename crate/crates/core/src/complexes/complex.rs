use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use super::{ChainComplex, HomologyGroup, Simplex, VertexId};
use crate::algebra::{CoefficientSpec, IntMatrix};
use crate::error::Result;

/// A finite abstract simplicial complex.
///
/// Simplices are grouped by dimension and sorted lexicographically within a
/// dimension; that order is the chain basis used by every matrix built here.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    by_dim: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Smallest complex containing every given vertex tuple.
    pub fn closure<I, T, S>(maximal: I) -> Result<Self>
    where
        I: IntoIterator<Item = T>,
        T: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let simplices = maximal
            .into_iter()
            .map(Simplex::new)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_simplices(simplices))
    }

    pub fn from_simplices(simplices: impl IntoIterator<Item = Simplex>) -> Self {
        Self::closure_up_to(simplices, None)
    }

    /// Closure truncated to dimension `max_dim`.
    pub fn closure_up_to(simplices: impl IntoIterator<Item = Simplex>, max_dim: Option<usize>) -> Self {
        let mut all = BTreeSet::new();
        for s in simplices {
            if s.is_empty() || all.contains(&s) {
                continue;
            }
            match max_dim {
                Some(d) if s.len() > d + 1 => add_faces_up_to(&s, d + 1, &mut all),
                _ => all.extend(s.subsets()),
            }
        }
        Self::from_closed_set(all)
    }

    /// The full simplex on a vertex set.
    pub fn full_simplex(vertices: impl IntoIterator<Item = VertexId>) -> Self {
        let vs: BTreeSet<VertexId> = vertices.into_iter().collect();
        if vs.is_empty() {
            return Self::empty();
        }
        Self::from_simplices([Simplex::from_sorted(vs.into_iter().collect())])
    }

    /// Caller guarantees `set` is closed under faces.
    pub(crate) fn from_closed_set(set: impl IntoIterator<Item = Simplex>) -> Self {
        let mut by_dim: Vec<Vec<Simplex>> = Vec::new();
        for s in set {
            let d = s.len() - 1;
            if by_dim.len() <= d {
                by_dim.resize(d + 1, Vec::new());
            }
            by_dim[d].push(s);
        }
        for layer in &mut by_dim {
            layer.sort();
            layer.dedup();
        }
        SimplicialComplex { by_dim }
    }

    pub fn is_empty(&self) -> bool {
        self.by_dim.is_empty()
    }

    /// Dimension; `-1` for the empty complex.
    pub fn dim(&self) -> isize {
        self.by_dim.len() as isize - 1
    }

    /// Total number of simplices.
    pub fn len(&self) -> usize {
        self.by_dim.iter().map(Vec::len).sum()
    }

    /// The `q`-simplices in basis order.
    pub fn simplices(&self, q: usize) -> &[Simplex] {
        self.by_dim.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn count(&self, q: usize) -> usize {
        self.simplices(q).len()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Simplex> {
        self.by_dim.iter().flatten()
    }

    pub fn vertices(&self) -> impl Iterator<Item = &VertexId> {
        self.simplices(0).iter().map(|s| &s.vertices()[0])
    }

    pub fn index_of(&self, s: &Simplex) -> Option<usize> {
        if s.is_empty() {
            return None;
        }
        self.simplices(s.len() - 1).binary_search(s).ok()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.index_of(s).is_some()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.iter().all(|s| other.contains(s))
    }

    pub fn skeleton(&self, n: usize) -> SimplicialComplex {
        SimplicialComplex {
            by_dim: self.by_dim.iter().take(n + 1).cloned().collect(),
        }
    }

    /// Simplices common to both complexes.
    pub fn intersection(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let (small, big) = if self.len() <= other.len() {
            (self, other)
        } else {
            (other, self)
        };
        Self::from_closed_set(small.iter().filter(|s| big.contains(s)).cloned())
    }

    pub fn union(&self, other: &SimplicialComplex) -> SimplicialComplex {
        let set: BTreeSet<Simplex> = self.iter().chain(other.iter()).cloned().collect();
        Self::from_closed_set(set)
    }

    /// Simplices that are not a proper face of another simplex.
    pub fn maximal_simplices(&self) -> Vec<Simplex> {
        let mut covered: BTreeSet<&Simplex> = BTreeSet::new();
        let mut out = Vec::new();
        for q in (0..self.by_dim.len()).rev() {
            for s in &self.by_dim[q] {
                if !covered.contains(s) {
                    out.push(s.clone());
                }
            }
            if q > 0 {
                for s in &self.by_dim[q] {
                    for (_, f) in s.faces() {
                        if let Some(i) = self.index_of(&f) {
                            covered.insert(&self.by_dim[q - 1][i]);
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Matrix of `C_q -> C_{q-1}`: the column of `s` has `(-1)^j` at row `face_j(s)`.
    ///
    /// For `q = 0` the target is zero-dimensional, unless `augmented` is set, in which
    /// case it is the single augmentation row of ones.
    pub fn boundary_matrix(&self, q: usize, augmented: bool) -> IntMatrix {
        let cols = self.simplices(q);
        if q == 0 {
            let rows = usize::from(augmented);
            let mut m = IntMatrix::zeros(rows, cols.len());
            if augmented {
                for c in 0..cols.len() {
                    m.set(0, c, BigInt::from(1));
                }
            }
            return m;
        }
        let rows = self.simplices(q - 1);
        let mut m = IntMatrix::zeros(rows.len(), cols.len());
        for (c, s) in cols.iter().enumerate() {
            for (j, f) in s.faces() {
                let r = rows.binary_search(&f).expect("complex is closed under faces");
                m.set(r, c, BigInt::from(if j % 2 == 0 { 1 } else { -1 }));
            }
        }
        m
    }

    /// Simplicial chain complex in degrees `0..=dim`, augmented when `reduced`.
    pub fn chain_complex(&self, reduced: bool) -> ChainComplex {
        let n = self.by_dim.len();
        ChainComplex::new(
            (0..n).map(|q| self.count(q)).collect(),
            (0..n).map(|q| self.boundary_matrix(q, reduced)).collect(),
        )
        .expect("simplicial boundaries are well formed")
    }

    /// Homology in degrees `0..=dim`; empty for the empty complex.
    pub fn homology(&self, coeff: CoefficientSpec, reduced: bool) -> Vec<HomologyGroup> {
        self.chain_complex(reduced).homology(coeff)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.by_dim
            .iter()
            .enumerate()
            .map(|(q, l)| if q % 2 == 0 { l.len() as i64 } else { -(l.len() as i64) })
            .sum()
    }

    /// Maps every vertex to the least vertex of its connected component.
    pub fn component_representatives(&self) -> BTreeMap<VertexId, VertexId> {
        let verts: Vec<VertexId> = self.vertices().cloned().collect();
        let mut parent: Vec<usize> = (0..verts.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for e in self.simplices(1) {
            let a = verts.binary_search(&e.vertices()[0]).expect("vertex present");
            let b = verts.binary_search(&e.vertices()[1]).expect("vertex present");
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            // keep the smaller index as root so the root is the least vertex
            if ra < rb {
                parent[rb] = ra;
            } else if rb < ra {
                parent[ra] = rb;
            }
        }
        (0..verts.len())
            .map(|i| {
                let r = find(&mut parent, i);
                (verts[i].clone(), verts[r].clone())
            })
            .collect()
    }

    pub fn component_count(&self) -> usize {
        self.component_representatives()
            .iter()
            .filter(|(v, r)| v == r)
            .count()
    }
}

fn add_faces_up_to(s: &Simplex, max_len: usize, out: &mut BTreeSet<Simplex>) {
    // enumerate index subsets of size <= max_len without the full power set
    let vs = s.vertices();
    let mut stack: Vec<(usize, Vec<VertexId>)> = vec![(0, Vec::new())];
    while let Some((start, cur)) = stack.pop() {
        for i in start..vs.len() {
            let mut next = cur.clone();
            next.push(vs[i].clone());
            if next.len() < max_len {
                stack.push((i + 1, next.clone()));
            }
            out.insert(Simplex::from_sorted(next));
        }
    }
}
