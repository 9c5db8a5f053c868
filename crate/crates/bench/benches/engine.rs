use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lconn_bench::entry;
use lconn_core::classes::{self, GroupClass};
use lconn_core::connection::are_connected;
use lconn_core::corpus::{enumerate_subgroups, find_factorizations};
use lconn_core::PermGroup;
use std::hint::black_box;

fn closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("closure");
    for name in ["S4", "S5", "SL25", "E27:A4"] {
        let g = entry(name).group;
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| {
            b.iter(|| PermGroup::closure(g.degree(), black_box(g.generators())).unwrap())
        });
    }
    group.finish();
}

fn radicals(c: &mut Criterion) {
    let mut group = c.benchmark_group("radicals");
    for name in ["S4", "E16:D10", "A5xC2"] {
        let g = entry(name).group;
        group.bench_with_input(BenchmarkId::new("fitting_series", name), &g, |b, g| {
            b.iter(|| classes::series(black_box(g), &classes::SeriesKind::Fitting).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("soluble_radical", name), &g, |b, g| {
            b.iter(|| classes::radical(black_box(g), &GroupClass::soluble()).unwrap())
        });
    }
    group.finish();
}

fn subgroups(c: &mut Criterion) {
    let mut group = c.benchmark_group("subgroups");
    group.sample_size(10);
    for name in ["S4", "C2wrS3", "S5"] {
        let g = entry(name).group;
        group.bench_with_input(BenchmarkId::new("enumerate", name), &g, |b, g| {
            b.iter(|| enumerate_subgroups(black_box(g)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("factorizations", name), &g, |b, g| {
            b.iter(|| find_factorizations(black_box(g), true).unwrap())
        });
    }
    group.finish();
}

fn connection(c: &mut Criterion) {
    let s4 = entry("S4");
    let (a, b) = (s4.subgroup("Klein").unwrap().clone(), s4.subgroup("S3").unwrap().clone());
    let n2 = GroupClass::nilpotent_length(2);
    c.bench_function("are_connected/S4 Klein S3 N^2", |bench| {
        bench.iter(|| are_connected(black_box(&a), black_box(&b), &n2).unwrap())
    });
}

criterion_group!(benches, closure, radicals, subgroups, connection);
criterion_main!(benches);
