use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigUint;
use supercong_core::gamma::gamma_direct;
use supercong_core::{GammaEvaluator, PRational, PrimeContext};

fn mahler_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("mahler_build");
    group.sample_size(10);
    for (p, n) in [(11u64, 7u32), (31, 7), (97, 8)] {
        let ctx = PrimeContext::new(p, n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(format!("p{p}_N{n}")), &ctx, |b, ctx| {
            b.iter(|| GammaEvaluator::new(ctx).build_mahler().unwrap())
        });
    }
    group.finish();
}

fn gamma_eval(c: &mut Criterion) {
    let ctx = PrimeContext::new(41, 7).unwrap();
    let eval = GammaEvaluator::new(&ctx);
    eval.build_mahler().unwrap();
    let x = PRational::new(2, 5);
    c.bench_function("gamma_at_mahler_p41_N7", |b| b.iter(|| eval.gamma_at(black_box(&x)).unwrap()));
    let small = PrimeContext::new(7, 5).unwrap();
    let r = BigUint::from(12_345u32);
    c.bench_function("gamma_direct_p7_N5", |b| b.iter(|| gamma_direct(black_box(&r), &small).unwrap()));
}

criterion_group!(benches, mahler_build, gamma_eval);
criterion_main!(benches);
