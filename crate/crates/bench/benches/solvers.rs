use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use vfree_bench::{blossom_instance, hypergraph_instance, liang_instance};
use vfree_core::extended::perfect_extended_matching;
use vfree_core::liang::solve_liang;
use vfree_core::matching::{max_matching_bipartite, max_matching_general};

fn bench_bipartite_matching(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_matching_bipartite");
    for scale in [1, 4, 8] {
        let g = liang_instance(scale);
        group.bench_with_input(BenchmarkId::from_parameter(10 * scale), &g, |b, g| {
            b.iter(|| max_matching_bipartite(g))
        });
    }
    group.finish();
}

fn bench_blossom(c: &mut Criterion) {
    let mut group = c.benchmark_group("max_matching_general");
    for n in [16, 48, 96] {
        let g = blossom_instance(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| max_matching_general(g))
        });
    }
    group.finish();
}

fn bench_solve_liang(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_liang");
    for scale in [1, 4, 8] {
        let g = liang_instance(scale);
        group.bench_with_input(BenchmarkId::from_parameter(10 * scale), &g, |b, g| {
            b.iter(|| solve_liang(g).unwrap())
        });
    }
    group.finish();
}

fn bench_perfect_extended(c: &mut Criterion) {
    let mut group = c.benchmark_group("perfect_extended_matching");
    for n in [12, 30, 60] {
        let h = hypergraph_instance(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &h, |b, h| {
            b.iter(|| perfect_extended_matching(h).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_bipartite_matching,
    bench_blossom,
    bench_solve_liang,
    bench_perfect_extended
);
criterion_main!(benches);
