//! The data-parallel paths against the same code on a one-thread pool.
//! Built without the `parallel` feature both sides run sequentially.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use dumas::oracle::{factor_search, fuzz_theorem, FuzzConfig, FuzzFamily, FuzzMode};
use dumas::sample::{planted_product, random_pairs, rng_for, SampleSpec};
use dumas::text::parse_ring;
use dumas::{Ring, SearchBudget, Valuation, WeightVector};
use rayon::ThreadPool;

fn pools() -> Vec<(&'static str, ThreadPool)> {
    let default = rayon::ThreadPoolBuilder::new().build().unwrap();
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    vec![("pool", default), ("one-thread", single)]
}

fn axioms(c: &mut Criterion) {
    let r = parse_ring("Z[Y,Z]").unwrap();
    let pairs = random_pairs(&r, 1, 10_000, &SampleSpec::default());
    let v = Valuation::DegNu(WeightVector::new(vec![2, 1]));
    let mut group = c.benchmark_group("axioms");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| black_box(v.check_axioms(&r, &pairs))))
        });
    }
    group.finish();
}

fn oracle(c: &mut Criterion) {
    let plants: Vec<_> = (0..20)
        .map(|i| planted_product(&mut rng_for(3, i), 7, 5).2)
        .collect();
    let budget = SearchBudget::new(5, 50_000_000).unwrap();
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                pool.install(|| {
                    for f in &plants {
                        black_box(factor_search(f, budget).unwrap());
                    }
                })
            })
        });
    }
    group.finish();
}

fn fuzz(c: &mut Criterion) {
    let zy = Ring::Integers.poly(["Y"]).unwrap();
    let mut cfg = FuzzConfig::new(FuzzFamily::DegNu, FuzzMode::Validate, zy, 2, 5);
    cfg.trials = 50;
    let mut group = c.benchmark_group("fuzz");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| pool.install(|| black_box(fuzz_theorem(&cfg).unwrap())))
        });
    }
    group.finish();
}

criterion_group!(benches, axioms, oracle, fuzz);
criterion_main!(benches);
