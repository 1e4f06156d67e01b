use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use lambertw::iterations::{fritsch, halley};
use lambertw::oracle::{reference_w, sweep, Evaluator, Grid};
use lambertw::{initial_approximation, lambert_w, Branch};
use lambertw_bench::{domain_inputs, step_inputs};

const N: usize = 1_000;

fn evaluation(c: &mut Criterion) {
    let mut group = c.benchmark_group("evaluate");
    group.throughput(Throughput::Elements(N as u64));
    for branch in Branch::ALL {
        let xs = domain_inputs(branch, N);
        group.bench_with_input(BenchmarkId::new("lambert_w", branch), &xs, |b, xs| {
            b.iter(|| {
                for &x in xs {
                    black_box(lambert_w(branch, black_box(x)).unwrap());
                }
            })
        });
        group.bench_with_input(BenchmarkId::new("initial", branch), &xs, |b, xs| {
            b.iter(|| {
                for &x in xs {
                    black_box(initial_approximation(branch, black_box(x)).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn steps(c: &mut Criterion) {
    let inputs = step_inputs(N);
    let mut group = c.benchmark_group("step");
    group.throughput(Throughput::Elements(inputs.len() as u64));
    for (name, step) in [
        ("halley", halley as fn(f64, f64) -> _),
        ("fritsch", fritsch),
    ] {
        group.bench_function(name, |b| {
            b.iter(|| {
                for &(x, w) in &inputs {
                    black_box(step(black_box(x), black_box(w * (1.0 + 1e-6))).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let xs = domain_inputs(Branch::Principal, 100);
    c.bench_function("reference_w/100", |b| {
        b.iter(|| {
            for &x in &xs {
                black_box(reference_w(Branch::Principal, black_box(x)).unwrap());
            }
        })
    });

    let grid = Grid::log(0.3, 1e5, 1_000).unwrap();
    let mut group = c.benchmark_group("sweep");
    group.sample_size(20);
    group.bench_function("full/log/1000", |b| {
        b.iter(|| sweep(Branch::Principal, Evaluator::Full, &grid).unwrap())
    });
    group.finish();
}

criterion_group!(benches, evaluation, steps, oracle);
criterion_main!(benches);
