//! Sequential against rayon execution on the heavier verification sweeps.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use splab::exec::Exec;
use splab::verify::{run_suite, Suite, VerifyConfig};

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweeps");
    group.sample_size(10);
    let cases = [
        (Suite::MixedJdt, VerifyConfig { n: Some(3), len: Some(6), ..Default::default() }),
        (Suite::SwCount, VerifyConfig { n: Some(3), max_size: Some(6), ..Default::default() }),
        (Suite::Cho, VerifyConfig { n: Some(3), max_size: Some(6), ..Default::default() }),
    ];
    for (suite, base) in cases {
        for exec in [Exec::Sequential, Exec::Parallel] {
            let config = VerifyConfig { exec, ..base };
            group.bench_with_input(BenchmarkId::new(suite.name(), exec), &config, |b, cfg| {
                b.iter(|| run_suite(black_box(suite), cfg))
            });
        }
    }
    group.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
