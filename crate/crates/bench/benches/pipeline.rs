use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use zerosum_bench::{fixture, SIZES};
use zerosum_core::adversarial::{detect_affine, to_zero_sum};
use zerosum_core::gen::Family;
use zerosum_core::solvers::{minimax_solve, support_enumeration};

fn detection(c: &mut Criterion) {
    let mut group = c.benchmark_group("detect_affine");
    for n in SIZES {
        for family in [Family::DisguisedZeroSum, Family::OrdinalNotAffine] {
            let g = fixture(family, n, 0);
            group.bench_with_input(BenchmarkId::new(family.to_string(), n), &g, |b, g| b.iter(|| detect_affine(black_box(g))));
        }
    }
    group.finish();
}

fn minimax(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimax_solve");
    group.sample_size(10);
    for n in SIZES {
        let g = fixture(Family::DisguisedZeroSum, n, 0);
        let t = detect_affine(&g).transform().cloned().expect("planted game is adversarial");
        let z = to_zero_sum(&g, &t);
        group.bench_with_input(BenchmarkId::from_parameter(n), &z, |b, z| b.iter(|| minimax_solve(black_box(z)).unwrap()));
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("support_enumeration");
    group.sample_size(10);
    for n in [2, 3, 4] {
        let g = fixture(Family::Uniform, n, 0);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| support_enumeration(black_box(g), n).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, detection, minimax, enumeration);
criterion_main!(benches);
