use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use skein_bench::{braids, idempotent_shapes};
use skein_core::{hecke, Guard};

fn e_lambda(c: &mut Criterion) {
    let guard = Guard::default();
    let mut group = c.benchmark_group("e_lambda");
    for l in idempotent_shapes() {
        group.bench_with_input(BenchmarkId::from_parameter(&l), &l, |b, l| {
            b.iter(|| hecke::e_lambda(black_box(l), &guard).unwrap())
        });
    }
    group.finish();
}

fn block_square(c: &mut Criterion) {
    let guard = Guard::default();
    let mut group = c.benchmark_group("a_n squared");
    group.sample_size(10);
    for n in [4, 5, 6] {
        let a = hecke::a_n(n, &guard).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &a, |b, a| b.iter(|| a.mul(black_box(a)).unwrap()));
    }
    group.finish();
}

fn closures(c: &mut Criterion) {
    let guard = Guard::default();
    let mut group = c.benchmark_group("homfly");
    for (name, w) in braids() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &w, |b, w| {
            b.iter(|| hecke::homfly_of_braid(black_box(w), &guard).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("closure of e_lambda");
    for l in idempotent_shapes() {
        let e = hecke::e_lambda(&l, &guard).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(&l), &e, |b, e| {
            b.iter(|| hecke::closure_eval(black_box(e)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, e_lambda, block_square, closures);
criterion_main!(benches);
