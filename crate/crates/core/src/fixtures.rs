//! Standard small complexes and covers used in tests, benchmarks and docs.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::complexes::{SimplicialComplex, VertexId};
use crate::covers::{Cover, FiniteMetricSpace};

fn closure(max: &[&[&str]]) -> SimplicialComplex {
    SimplicialComplex::closure(max.iter().map(|s| s.iter().copied())).expect("fixture is valid")
}

fn label(s: &str) -> VertexId {
    VertexId::new(s).expect("fixture label")
}

/// Boundary of the `n`-simplex on vertices `0..=n`.
pub fn sphere(n: usize) -> SimplicialComplex {
    if n == 0 {
        return SimplicialComplex::empty();
    }
    let all: Vec<VertexId> = (0..=n).map(VertexId::from).collect();
    SimplicialComplex::full_simplex(all).skeleton(n - 1)
}

/// The full `n`-simplex on vertices `0..=n`.
pub fn simplex(n: usize) -> SimplicialComplex {
    SimplicialComplex::full_simplex((0..=n).map(VertexId::from))
}

/// Six-vertex, ten-triangle real projective plane.
pub fn projective_plane() -> SimplicialComplex {
    closure(&[
        &["1", "2", "3"],
        &["1", "3", "4"],
        &["1", "4", "5"],
        &["1", "5", "6"],
        &["1", "6", "2"],
        &["2", "3", "5"],
        &["3", "4", "6"],
        &["4", "5", "2"],
        &["5", "6", "3"],
        &["6", "2", "4"],
    ])
}

/// Seven-vertex torus: triangles `{i, i+1, i+3}` and `{i, i+2, i+3}` mod 7.
pub fn torus() -> SimplicialComplex {
    let tris = (0..7).flat_map(|i| {
        [
            [i, (i + 1) % 7, (i + 3) % 7].map(|v: usize| v.to_string()),
            [i, (i + 2) % 7, (i + 3) % 7].map(|v: usize| v.to_string()),
        ]
    });
    SimplicialComplex::closure(tris).expect("fixture is valid")
}

/// Boundary of the triangle `abc` covered by its three closed edges,
/// labeled so that `U_a = ab`, `U_b = bc`, `U_c = ac`.
pub fn triangle_cover() -> Cover {
    let base = closure(&[&["a", "b"], &["b", "c"], &["a", "c"]]);
    Cover::new(
        base,
        [
            (label("a"), closure(&[&["a", "b"]])),
            (label("b"), closure(&[&["b", "c"]])),
            (label("c"), closure(&[&["a", "c"]])),
        ],
    )
    .expect("fixture is valid")
}

/// Hexagon boundary on `1..6` covered by the arcs `1-2-3-4` and `4-5-6-1`.
pub fn hexagon_cover() -> Cover {
    let base = closure(&[
        &["1", "2"],
        &["2", "3"],
        &["3", "4"],
        &["4", "5"],
        &["5", "6"],
        &["1", "6"],
    ]);
    Cover::new(
        base,
        [
            (label("U1"), closure(&[&["1", "2"], &["2", "3"], &["3", "4"]])),
            (label("U2"), closure(&[&["4", "5"], &["5", "6"], &["1", "6"]])),
        ],
    )
    .expect("fixture is valid")
}

/// Corners of the unit square with exact Euclidean distances.
pub fn square_corners() -> FiniteMetricSpace {
    let coords = [[0, 0], [1, 0], [1, 1], [0, 1]]
        .iter()
        .map(|p| p.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect();
    FiniteMetricSpace::from_coordinates((0..4).map(VertexId::from).collect(), coords)
        .expect("fixture is valid")
}
