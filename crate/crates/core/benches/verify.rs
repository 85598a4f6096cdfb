use std::hint::black_box;

use burstperm::codes::{CodeParams, Cs1Params};
use burstperm::harness::{verify_code, verify_single, VerifyMode, VerifyOptions};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn worker_counts() -> Vec<(&'static str, usize)> {
    let mut v = vec![("sequential", 1)];
    if burstperm::par::parallel_enabled() {
        v.push(("parallel", 0));
    }
    v
}

fn bench_cs1(c: &mut Criterion) {
    let template = CodeParams::Cs1(Cs1Params::for_word(&[1, 2, 3, 4, 5, 6, 7, 8], 2, 2).unwrap());
    let mut group = c.benchmark_group("cs1_sampled_n8");
    group.sample_size(10);
    for (name, jobs) in worker_counts() {
        let opts = VerifyOptions {
            mode: VerifyMode::Sampled { seed: 1, samples: 5000 },
            jobs,
            ..VerifyOptions::default()
        };
        group.bench_with_input(BenchmarkId::from_parameter(name), &opts, |b, opts| {
            b.iter(|| black_box(verify_code(&template, opts).unwrap()))
        });
    }
    group.finish();
}

fn bench_single(c: &mut Criterion) {
    let mut group = c.benchmark_group("single_exhaustive_n8");
    group.sample_size(10);
    for (name, jobs) in worker_counts() {
        let opts = VerifyOptions { jobs, ..VerifyOptions::default() };
        group.bench_with_input(BenchmarkId::from_parameter(name), &opts, |b, opts| {
            b.iter(|| black_box(verify_single(8, opts).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_cs1, bench_single);
criterion_main!(benches);
