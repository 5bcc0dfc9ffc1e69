use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use schubert_levi::sweep::{self, Bounds, Check};
use schubert_levi::weyl;
use schubert_levi::{Execution, ParabolicSet, Permutation};

fn modes() -> Vec<(&'static str, Execution)> {
    let mut m = vec![("sequential", Execution::Sequential)];
    if Execution::Parallel.is_parallel() {
        m.push(("parallel", Execution::Parallel));
    }
    m
}

fn sweeps(c: &mut Criterion) {
    let cases = [
        (Check::HeadOracle, 7),
        (Check::DivisorStability, 7),
        (Check::Singular, 7),
        (Check::BpEquivalence, 5),
        (Check::MinimalHead, 5),
    ];
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for (check, max_n) in cases {
        let bounds = Bounds { max_n, max_m: 100 };
        for (name, mode) in modes() {
            group.bench_with_input(BenchmarkId::new(check.name(), name), &mode, |b, &mode| {
                b.iter(|| sweep::run_with(check, bounds, mode).unwrap())
            });
        }
    }
    group.finish();
}

fn intervals(c: &mut Criterion) {
    let w = Permutation::longest(8);
    let j = ParabolicSet::empty(8);
    let mut group = c.benchmark_group("lower_interval_s8");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_function(name, |b| b.iter(|| weyl::lower_interval_with(&w, &j, mode).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, sweeps, intervals);
criterion_main!(benches);
