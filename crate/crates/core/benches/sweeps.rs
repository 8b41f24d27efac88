//! Sequential against rayon-parallel execution of the main sweeps.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use qpwalks::counter::{count_dp_with, count_many};
use qpwalks::fixtures;
use qpwalks::par::Exec;
use qpwalks::prover::decide_all;
use qpwalks::stepset::StepSet;

const STRATEGIES: [(&str, Exec); 2] = [
    ("sequential", Exec::Sequential),
    ("parallel", Exec::Parallel),
];

fn all_models() -> Vec<StepSet> {
    fixtures::models().iter().map(|m| m.canonical()).collect()
}

fn count_all_models(c: &mut Criterion) {
    let models = all_models();
    let mut g = c.benchmark_group("count_many/79 models");
    for len in [20, 30] {
        for (name, exec) in STRATEGIES {
            g.bench_with_input(BenchmarkId::new(name, len), &len, |b, &len| {
                b.iter(|| count_many(black_box(&models), len, exec))
            });
        }
    }
    g.finish();
}

fn count_one_long(c: &mut Criterion) {
    let s: StepSet = "N,NE,E,SE,S,SW,W,NW".parse().unwrap();
    let mut g = c.benchmark_group("count_dp/king walks");
    for (name, exec) in STRATEGIES {
        g.bench_function(BenchmarkId::new(name, 80), |b| {
            b.iter(|| count_dp_with(black_box(s), 80, exec))
        });
    }
    g.finish();
}

fn decide_all_models(c: &mut Criterion) {
    let models = all_models();
    let mut g = c.benchmark_group("decide_all/79 models");
    g.sample_size(10).measurement_time(Duration::from_secs(20));
    for (name, exec) in STRATEGIES {
        g.bench_function(name, |b| {
            b.iter(|| decide_all(black_box(&models), exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, count_all_models, count_one_long, decide_all_models);
criterion_main!(benches);
