//! Benchmarks for the mod-p sweeps: the rayon path against the sequential
//! fallback, and the prefix-sharing composition sweep against per-index
//! evaluation. Build without default features to measure the fully
//! sequential core (the two paths then coincide).

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

use mzv_core::fmzv_engine::{
    composition_values_mod_p, harmonic_mod_p, primes_in, verify_weighted_sum,
};
use mzv_core::index_algebra::{compositions, indices_up_to_weight};
use mzv_core::parallel::{map_collect, map_collect_seq};
use mzv_core::Index;

fn grid_pairs(max_weight: u32, pmax: u64) -> Vec<(Index, u64)> {
    let primes = primes_in(2, pmax).unwrap();
    indices_up_to_weight(max_weight)
        .into_iter()
        .flat_map(|k| primes.iter().map(move |&p| (k.clone(), p)))
        .collect()
}

fn bench_grid_parallel_vs_sequential(c: &mut Criterion) {
    let pairs = grid_pairs(6, 199);
    let mut group = c.benchmark_group("fmzv_grid");
    group.throughput(Throughput::Elements(pairs.len() as u64));
    group.bench_function("sequential", |b| {
        b.iter(|| {
            map_collect_seq(black_box(pairs.clone()), |(k, p)| {
                harmonic_mod_p(&k, p, false).residue()
            })
        })
    });
    group.bench_function("parallel", |b| {
        b.iter(|| {
            map_collect(black_box(pairs.clone()), |(k, p)| {
                harmonic_mod_p(&k, p, false).residue()
            })
        })
    });
    group.finish();
}

fn bench_composition_sweep(c: &mut Criterion) {
    let (k, r, p) = (10u32, 5u32, 997u64);
    let n = compositions(k, r).unwrap().len() as u64;
    let mut group = c.benchmark_group("composition_sweep");
    group.throughput(Throughput::Elements(n));
    group.bench_with_input(
        BenchmarkId::new("prefix_sharing", format!("k{k}r{r}p{p}")),
        &(k, r, p),
        |b, &(k, r, p)| b.iter(|| composition_values_mod_p(k, r, black_box(p), false).unwrap()),
    );
    group.bench_with_input(
        BenchmarkId::new("per_index", format!("k{k}r{r}p{p}")),
        &(k, r, p),
        |b, &(k, r, p)| {
            let comps = compositions(k, r).unwrap();
            b.iter(|| {
                comps
                    .iter()
                    .map(|c| harmonic_mod_p(c, black_box(p), false).residue())
                    .collect::<Vec<_>>()
            })
        },
    );
    group.finish();
}

fn bench_weighted_sum_sweep(c: &mut Criterion) {
    let primes = primes_in(2, 199).unwrap();
    c.bench_function("weighted_sum_k8_r5_i3", |b| {
        b.iter(|| verify_weighted_sum(8, 5, 3, black_box(&primes), false).unwrap())
    });
}

criterion_group!(
    benches,
    bench_grid_parallel_vs_sequential,
    bench_composition_sweep,
    bench_weighted_sum_sweep
);
criterion_main!(benches);
