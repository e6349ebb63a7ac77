use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use homnerve::algebra::{snf, CoefficientSpec, IntMatrix};
use homnerve::fixtures;
use homnerve::mvss::{ss_pages, DoubleComplex, Filtration};
use homnerve::nervethm::check_theorem;
use homnerve::random::{random_complex, random_cover};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_matrix(n: usize) -> IntMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.gen_range(-9..=9)).collect()).collect();
    IntMatrix::from_rows(&rows).unwrap()
}

fn bench_algebra(c: &mut Criterion) {
    let m = random_matrix(12);
    c.bench_function("snf 12x12", |b| b.iter(|| snf(black_box(&m))));
    let torus = fixtures::torus();
    c.bench_function("homology torus z", |b| b.iter(|| black_box(&torus).homology(CoefficientSpec::Integers, false)));
    let rp2 = fixtures::projective_plane();
    c.bench_function("homology rp2 z", |b| b.iter(|| black_box(&rp2).homology(CoefficientSpec::Integers, false)));
}

fn bench_pipeline(c: &mut Criterion) {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let base = random_complex(&mut rng, 7, 30);
    let cover = random_cover(&mut rng, &base);
    c.bench_function("double complex build", |b| b.iter(|| DoubleComplex::full(black_box(&cover))));
    let d = DoubleComplex::full(&cover);
    c.bench_function("second sequence to E2 over q", |b| {
        b.iter(|| ss_pages(black_box(&d), Filtration::Second, CoefficientSpec::Rationals, 2).unwrap())
    });
    let tri = fixtures::triangle_cover();
    c.bench_function("check theorem triangle k=1", |b| b.iter(|| check_theorem(black_box(&tri), 1, false).unwrap()));
    c.bench_function("check theorem triangle k=1 traced", |b| {
        b.iter(|| check_theorem(black_box(&tri), 1, true).unwrap())
    });
}

criterion_group!(benches, bench_algebra, bench_pipeline);
criterion_main!(benches);
