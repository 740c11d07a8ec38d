use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use mcsc_bench::sparse_instance;
use mcsc_core::exact::{min_csc, min_set_cover, OracleLimits};
use mcsc_core::graph::cover_diameter;
use mcsc_core::greedy::{classic_greedy_set_cover, modified_greedy};

fn greedy(c: &mut Criterion) {
    let mut group = c.benchmark_group("modified_greedy");
    for &(n, m) in &[(50, 30), (200, 100), (1000, 300)] {
        let inst = sparse_instance(n, m, 7);
        group.bench_with_input(BenchmarkId::from_parameter(format!("{n}x{m}")), &inst, |b, inst| {
            b.iter(|| modified_greedy(black_box(inst)).unwrap())
        });
    }
    group.finish();

    let inst = sparse_instance(200, 100, 7);
    c.bench_function("classic_greedy_set_cover/200x100", |b| {
        b.iter(|| classic_greedy_set_cover(black_box(&inst)).unwrap())
    });
    c.bench_function("cover_diameter/200x100", |b| b.iter(|| cover_diameter(black_box(&inst)).unwrap()));
}

fn oracles(c: &mut Criterion) {
    let limits = OracleLimits::default();
    let inst = sparse_instance(12, 14, 3);
    c.bench_function("min_set_cover/12x14", |b| {
        b.iter(|| min_set_cover(black_box(&inst), &limits).unwrap())
    });
    c.bench_function("min_csc/12x14", |b| b.iter(|| min_csc(black_box(&inst), &limits).unwrap()));
}

criterion_group!(benches, greedy, oracles);
criterion_main!(benches);
