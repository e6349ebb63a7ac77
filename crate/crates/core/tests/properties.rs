mod common;

use std::collections::BTreeSet;

use homnerve::algebra::{kernel_basis, snf, subspace_dim, CoefficientSpec, IntMatrix, SubspaceExpr};
use homnerve::complexes::{HomologyGroup, Simplex, SimplicialComplex, VertexId};
use homnerve::covers::{dowker_pair, DowkerRelation};
use homnerve::mvss::{nf_complex, total_complex, DoubleComplex};
use homnerve::random::{random_complex, random_cover};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn matrix(max: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max, 1..=max).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-9i64..=9, c), r))
}

fn complex_from_seed(seed: u64) -> SimplicialComplex {
    random_complex(&mut ChaCha8Rng::seed_from_u64(seed), 7, 25)
}

/// All elements of the span of `vs` in (Z/2)^n, as bitmasks.
fn f2_span(vs: &[u32]) -> BTreeSet<u32> {
    let mut out = BTreeSet::from([0u32]);
    for &v in vs {
        let next: Vec<u32> = out.iter().map(|x| x ^ v).collect();
        out.extend(next);
    }
    out
}

fn to_bits(mask: u32, n: usize) -> Vec<i64> {
    (0..n).map(|i| i64::from((mask >> i) & 1)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn snf_agrees_with_minors(m in matrix(5)) {
        let got = snf(&IntMatrix::from_rows(&m).unwrap()).into_vec();
        prop_assert_eq!(got, common::invariant_factors_by_minors(&m));
    }

    #[test]
    fn snf_invariant_under_row_ops(m in matrix(6), seed in any::<u64>()) {
        let base = snf(&IntMatrix::from_rows(&m).unwrap());
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut rows = m.clone();
        rows.shuffle(&mut rng);
        rows[0].iter_mut().for_each(|x| *x = -*x);
        let mut t: Vec<Vec<i64>> = (0..rows[0].len()).map(|j| rows.iter().map(|r| r[j]).collect()).collect();
        t.shuffle(&mut rng);
        prop_assert_eq!(snf(&IntMatrix::from_rows(&t).unwrap()), base);
    }

    #[test]
    fn divisibility_chain(m in matrix(6)) {
        let f = snf(&IntMatrix::from_rows(&m).unwrap()).into_vec();
        for w in f.windows(2) {
            prop_assert!((&w[1] % &w[0]).is_zero());
        }
    }

    #[test]
    fn kernel_vectors_are_killed(m in matrix(6)) {
        let im = IntMatrix::from_rows(&m).unwrap();
        for coeff in [CoefficientSpec::Rationals, CoefficientSpec::PrimeField(7)] {
            let ker = kernel_basis(&im, coeff).unwrap();
            for v in &ker {
                for row in &m {
                    let dot: BigRational = row.iter().zip(v).map(|(a, x)| BigRational::from(BigInt::from(*a)) * x).sum();
                    match coeff {
                        CoefficientSpec::PrimeField(p) => prop_assert!((dot.to_integer() % BigInt::from(p)).is_zero() && dot.is_integer()),
                        _ => prop_assert!(dot.is_zero()),
                    }
                }
            }
            let rank = homnerve::algebra::rank(&im, coeff).unwrap();
            prop_assert_eq!(ker.len() + rank, m[0].len());
        }
    }

    #[test]
    fn subspace_dims_over_f2(n in 1usize..=6, us in prop::collection::vec(0u32..64, 0..4), ws in prop::collection::vec(0u32..64, 0..4)) {
        let mask = (1u32 << n) - 1;
        let us: Vec<u32> = us.into_iter().map(|x| x & mask).collect();
        let ws: Vec<u32> = ws.into_iter().map(|x| x & mask).collect();
        let (su, sw) = (f2_span(&us), f2_span(&ws));
        let both: Vec<u32> = us.iter().chain(&ws).copied().collect();
        let brute = |s: usize| s.trailing_zeros() as usize;
        let expr = |vs: &[u32]| SubspaceExpr::span(n, &vs.iter().map(|&v| to_bits(v, n)).collect::<Vec<_>>());
        let f2 = CoefficientSpec::PrimeField(2);
        let du = subspace_dim(&expr(&us), f2).unwrap();
        let dw = subspace_dim(&expr(&ws), f2).unwrap();
        let dsum = subspace_dim(&expr(&us).sum(expr(&ws)), f2).unwrap();
        let dint = subspace_dim(&expr(&us).intersect(expr(&ws)), f2).unwrap();
        prop_assert_eq!(du, brute(su.len()));
        prop_assert_eq!(dsum, brute(f2_span(&both).len()));
        prop_assert_eq!(dint, brute(su.intersection(&sw).count()));
        prop_assert_eq!(dsum + dint, du + dw);
    }

    #[test]
    fn euler_characteristic_is_alternating_betti(seed in any::<u64>()) {
        let k = complex_from_seed(seed);
        for coeff in [CoefficientSpec::Rationals, CoefficientSpec::PrimeField(2)] {
            let alt: i64 = k.homology(coeff, false).iter().enumerate()
                .map(|(j, g)| if j % 2 == 0 { g.free_rank as i64 } else { -(g.free_rank as i64) })
                .sum();
            prop_assert_eq!(alt, k.euler_characteristic());
        }
    }

    #[test]
    fn integer_free_rank_matches_rationals(seed in any::<u64>()) {
        let k = complex_from_seed(seed);
        let hz = k.homology(CoefficientSpec::Integers, false);
        let hq = k.homology(CoefficientSpec::Rationals, false);
        prop_assert_eq!(hz.len(), hq.len());
        for (a, b) in hz.iter().zip(&hq) {
            prop_assert_eq!(a.free_rank, b.free_rank);
        }
    }

    #[test]
    fn closure_ignores_order(seed in any::<u64>()) {
        let k = complex_from_seed(seed);
        let mut maximal = k.maximal_simplices();
        maximal.shuffle(&mut ChaCha8Rng::seed_from_u64(seed ^ 0x5eed));
        let lists: Vec<Vec<String>> = maximal.iter()
            .map(|s| { let mut v: Vec<String> = s.vertices().iter().map(|x| x.as_str().to_string()).collect(); v.reverse(); v })
            .collect();
        let rebuilt = SimplicialComplex::closure(lists).unwrap();
        prop_assert_eq!(rebuilt, k);
    }

    #[test]
    fn dowker_homology_agrees(rows in 1usize..=5, cols in 1usize..=5, bits in prop::collection::vec(any::<bool>(), 25)) {
        let r: Vec<VertexId> = (0..rows).map(|i| VertexId::new(format!("r{i}")).unwrap()).collect();
        let c: Vec<VertexId> = (0..cols).map(|j| VertexId::new(format!("c{j}")).unwrap()).collect();
        let mut pairs = Vec::new();
        for i in 0..rows {
            for j in 0..cols {
                if bits[i * 5 + j] {
                    pairs.push((r[i].clone(), c[j].clone()));
                }
            }
        }
        let rel = DowkerRelation::new(r, c, pairs).unwrap();
        let (a, b) = dowker_pair(&rel, None);
        let (ha, hb) = (a.homology(CoefficientSpec::Integers, false), b.homology(CoefficientSpec::Integers, false));
        for j in 0..ha.len().max(hb.len()) {
            prop_assert_eq!(HomologyGroup::at(&ha, j), HomologyGroup::at(&hb, j));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn simplex_covers_of_cells_are_acyclic(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random_complex(&mut rng, 6, 20);
        let cover = random_cover(&mut rng, &base);
        for tau in base.iter() {
            let nf = nf_complex(&cover, tau).unwrap();
            prop_assert!(nf.homology(CoefficientSpec::Integers, true).iter().all(HomologyGroup::is_zero), "N_F({}) not acyclic", tau);
        }
    }

    #[test]
    fn total_homology_is_base_homology(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let base = random_complex(&mut rng, 6, 20);
        let cover = random_cover(&mut rng, &base);
        let d = DoubleComplex::full(&cover);
        let tot = total_complex(&d).unwrap().homology(CoefficientSpec::Integers);
        let hb = base.homology(CoefficientSpec::Integers, false);
        for j in 0..tot.len().max(hb.len()) {
            prop_assert_eq!(HomologyGroup::at(&tot, j), HomologyGroup::at(&hb, j), "degree {}", j);
        }
    }
}

#[test]
fn simplex_faces_have_one_fewer_vertex() {
    let s = Simplex::new(["3", "1", "2"]).unwrap();
    let faces: Vec<Simplex> = s.faces().map(|(_, f)| f).collect();
    assert_eq!(faces.len(), 3);
    assert!(faces.iter().all(|f| f.len() == 2 && f.is_face_of(&s)));
}
