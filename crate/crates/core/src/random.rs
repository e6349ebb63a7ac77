//! Seeded generators of small random instances for property suites and benchmarks.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::complexes::{SimplicialComplex, Simplex, VertexId};
use crate::covers::{Cover, DowkerRelation, FiniteMetricSpace};
use crate::nervethm::check_hypotheses;

/// Closure of random simplices on at most `max_vertices` vertices, with at most
/// `max_simplices` simplices in total. Never empty.
pub fn random_complex<R: Rng>(rng: &mut R, max_vertices: usize, max_simplices: usize) -> SimplicialComplex {
    let nv = rng.gen_range(2..=max_vertices.max(2));
    let verts: Vec<VertexId> = (0..nv).map(VertexId::from).collect();
    let mut gens: Vec<Simplex> = Vec::new();
    let mut current = SimplicialComplex::empty();
    for _ in 0..rng.gen_range(1..=2 * nv) {
        let size = rng.gen_range(1..=4.min(nv));
        let pick: Vec<VertexId> = verts.choose_multiple(rng, size).cloned().collect();
        let s = Simplex::from_vertices(pick).expect("distinct vertices");
        gens.push(s);
        let next = SimplicialComplex::from_simplices(gens.clone());
        if next.len() > max_simplices {
            gens.pop();
            if !current.is_empty() {
                break;
            }
            continue;
        }
        current = next;
    }
    if current.is_empty() {
        current = SimplicialComplex::full_simplex([verts[0].clone()]);
    }
    current
}

/// Closed star of a vertex: closure of every simplex containing it.
pub fn closed_star(k: &SimplicialComplex, v: &VertexId) -> SimplicialComplex {
    SimplicialComplex::from_simplices(k.iter().filter(|s| s.contains(v)).cloned())
}

/// A random valid cover of `base`: either closed stars of a vertex set hitting
/// every maximal simplex, or random groupings of the maximal simplices.
pub fn random_cover<R: Rng>(rng: &mut R, base: &SimplicialComplex) -> Cover {
    let maximal = base.maximal_simplices();
    if rng.gen_bool(0.5) {
        let mut centers: BTreeSet<VertexId> = base
            .vertices()
            .filter(|_| rng.gen_bool(0.4))
            .cloned()
            .collect();
        for m in &maximal {
            if !m.vertices().iter().any(|v| centers.contains(v)) {
                let v = m.vertices().choose(rng).expect("nonempty simplex").clone();
                centers.insert(v);
            }
        }
        let parts = centers
            .iter()
            .map(|c| (VertexId::new(format!("s{c}")).expect("label"), closed_star(base, c)));
        Cover::new(base.clone(), parts).expect("stars cover every maximal simplex")
    } else {
        let n_parts = rng.gen_range(1..=maximal.len().clamp(1, 4));
        let mut groups: Vec<Vec<Simplex>> = vec![Vec::new(); n_parts];
        for m in &maximal {
            groups[rng.gen_range(0..n_parts)].push(m.clone());
            if rng.gen_bool(0.3) {
                groups[rng.gen_range(0..n_parts)].push(m.clone());
            }
        }
        let parts = groups
            .into_iter()
            .filter(|g| !g.is_empty())
            .enumerate()
            .map(|(i, g)| (VertexId::new(format!("P{i}")).expect("label"), SimplicialComplex::from_simplices(g)));
        Cover::new(base.clone(), parts).expect("every maximal simplex is assigned")
    }
}

/// Draws covers until one satisfies the theorem's hypotheses at level `k`.
pub fn good_cover<R: Rng>(rng: &mut R, k: usize, max_simplices: usize, attempts: usize) -> Option<Cover> {
    (0..attempts).find_map(|_| {
        let base = random_complex(rng, 7, max_simplices);
        let cover = random_cover(rng, &base);
        check_hypotheses(&cover, k).passed.then_some(cover)
    })
}

/// Random relation between `rows` row labels `r0..` and `cols` column labels `c0..`.
pub fn random_relation<R: Rng>(rng: &mut R, rows: usize, cols: usize, density: f64) -> DowkerRelation {
    let rl: Vec<VertexId> = (0..rows).map(|i| VertexId::new(format!("r{i}")).expect("label")).collect();
    let cl: Vec<VertexId> = (0..cols).map(|i| VertexId::new(format!("c{i}")).expect("label")).collect();
    let mut pairs = Vec::new();
    for r in &rl {
        for c in &cl {
            if rng.gen_bool(density) {
                pairs.push((r.clone(), c.clone()));
            }
        }
    }
    DowkerRelation::new(rl, cl, pairs).expect("labels are declared")
}

/// `n` random points in the plane with coordinates in `0..=10`.
pub fn random_metric_space<R: Rng>(rng: &mut R, n: usize) -> FiniteMetricSpace {
    let coords = (0..n)
        .map(|_| {
            (0..2)
                .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(0..=10))))
                .collect()
        })
        .collect();
    FiniteMetricSpace::from_coordinates((0..n).map(VertexId::from).collect(), coords)
        .expect("labels are distinct")
}
