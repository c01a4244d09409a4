use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use quartic_core::search::DiffIndex;
use quartic_core::{Engine, SearchOptions};

fn index_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("diff_index_build");
    for bound in [250u32, 500, 1000] {
        group.bench_with_input(BenchmarkId::from_parameter(bound), &bound, |b, &n| {
            b.iter(|| DiffIndex::build(black_box(n)))
        });
    }
    group.finish();
}

fn mitm_vs_brute(c: &mut Criterion) {
    let mut group = c.benchmark_group("search_h6");
    group.sample_size(10);
    let mut engine = Engine::new(SearchOptions::default()).unwrap();
    for bound in [20u32, 40] {
        group.bench_with_input(BenchmarkId::new("brute", bound), &bound, |b, &n| {
            b.iter(|| engine.brute(black_box(6), n).unwrap())
        });
    }
    for bound in [20u32, 40, 500] {
        group.bench_with_input(BenchmarkId::new("mitm", bound), &bound, |b, &n| {
            // index is cached after the first call; this measures the probe
            b.iter(|| engine.mitm(black_box(6), n).unwrap())
        });
    }
    group.finish();
}

fn threads(c: &mut Criterion) {
    let mut group = c.benchmark_group("mitm_h1_bound500_threads");
    group.sample_size(10);
    for t in [1usize, 2, 8] {
        let mut engine = Engine::new(SearchOptions {
            threads: t,
            ..Default::default()
        })
        .unwrap();
        engine.mitm(1, 500).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, _| {
            b.iter(|| engine.mitm(black_box(1), 500).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, index_build, mitm_vs_brute, threads);
criterion_main!(benches);
