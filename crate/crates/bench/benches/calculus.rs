use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fockcalc::{berezin, op_equal_on_basis, quad_integral, sharp, OpChain};
use fockcalc_bench::{general_symbols, holomorphic_pairs, pluriharmonic_chain};

fn bench_sharp(c: &mut Criterion) {
    let mut group = c.benchmark_group("sharp");
    for n in 1..=3 {
        let pairs = holomorphic_pairs(n, 16);
        group.bench_with_input(BenchmarkId::from_parameter(n), &pairs, |b, pairs| {
            b.iter(|| {
                for (f, g) in pairs {
                    black_box(sharp(f, g).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn bench_berezin(c: &mut Criterion) {
    let mut group = c.benchmark_group("berezin");
    for n in 1..=3 {
        let symbols = general_symbols(n, 16);
        group.bench_with_input(BenchmarkId::from_parameter(n), &symbols, |b, symbols| {
            b.iter(|| {
                for s in symbols {
                    black_box(berezin(s));
                }
            })
        });
    }
    group.finish();
}

fn bench_basis(c: &mut Criterion) {
    let mut group = c.benchmark_group("op_equal_on_basis");
    group.sample_size(20);
    for n in 1..=2 {
        let chain = pluriharmonic_chain(n);
        let reversed = OpChain::new(chain.symbols().iter().rev().cloned().collect()).unwrap();
        group.bench_function(BenchmarkId::new("degree-6", n), |b| {
            b.iter(|| black_box(op_equal_on_basis(&chain, &reversed, 6, 1e-9).unwrap()))
        });
    }
    group.finish();
}

fn bench_quadrature(c: &mut Criterion) {
    let s = general_symbols(1, 1).remove(0);
    c.bench_function("quad_integral/order-40", |b| {
        b.iter(|| black_box(quad_integral(&s, 40).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_sharp,
    bench_berezin,
    bench_basis,
    bench_quadrature
);
criterion_main!(benches);
