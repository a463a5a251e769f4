use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use darboux_bench::{dense_poly, parameter_sets};
use darboux_core::search::{search_with, Execution};
use darboux_core::{certify, darboux_nullspace, LVParams, LinForm, Poly};

fn poly_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("poly_mul");
    for n in [2u8, 4, 6] {
        let f = dense_poly(n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &f, |b, f| b.iter(|| black_box(f) * black_box(f)));
    }
    group.finish();
}

fn nullspace(c: &mut Criterion) {
    let p = LVParams::from_ints(5, 1, 1);
    let lambda = LinForm::from_ints(-1, 4, 2);
    c.bench_function("nullspace_deg3", |b| {
        b.iter(|| darboux_nullspace(black_box(&p), 3, black_box(&lambda)))
    });
}

fn search(c: &mut Criterion) {
    let mut group = c.benchmark_group("search");
    group.sample_size(10);
    for (name, p) in parameter_sets() {
        for m in [2u32, 3] {
            for (mode, exec) in [("seq", Execution::Sequential), ("par", Execution::Parallel)] {
                group.bench_function(format!("{name}/m{m}/{mode}"), |b| {
                    b.iter(|| search_with(black_box(&p), m, exec))
                });
            }
        }
    }
    group.finish();
}

fn certification(c: &mut Criterion) {
    let p = LVParams::from_ints(5, 1, 1);
    let f: Poly = "x2^2*x3*(x1+x2)^2*(x1+x2+x3)^2".parse().unwrap();
    c.bench_function("certify_deg7", |b| b.iter(|| certify(black_box(&p), black_box(&f)).unwrap()));
}

criterion_group!(benches, poly_mul, nullspace, search, certification);
criterion_main!(benches);
