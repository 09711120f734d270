use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use gtsep::gt::{census, census_sequential};
use gtsep::par;
use gtsep::urysohn::{decide_statement, Statement};

fn bench_census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for n in [3usize, 4] {
        group.bench_with_input(BenchmarkId::new("parallel", n), &n, |b, &n| b.iter(|| census(black_box(n)).unwrap()));
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, &n| {
            b.iter(|| census_sequential(black_box(n)).unwrap())
        });
    }
    group.finish();
}

fn bench_decisions(c: &mut Criterion) {
    let spaces = census(4).unwrap();
    let gul = |x: &gtsep::FiniteGT| decide_statement(x, Statement::Gul).unwrap().holds;
    let tet = |x: &gtsep::FiniteGT| decide_statement(x, Statement::Tet).unwrap().holds;
    let mut group = c.benchmark_group("decide over the 4-point census");
    group.sample_size(10);
    group.bench_function("GUL parallel", |b| b.iter(|| par::map(black_box(&spaces), gul)));
    group.bench_function("GUL sequential", |b| b.iter(|| par::map_sequential(black_box(&spaces), gul)));
    group.bench_function("TET parallel", |b| b.iter(|| par::map(black_box(&spaces), tet)));
    group.bench_function("TET sequential", |b| b.iter(|| par::map_sequential(black_box(&spaces), tet)));
    group.finish();
}

criterion_group!(benches, bench_census, bench_decisions);
criterion_main!(benches);
