//! Benchmarks of the computational kernels: power expansion, matching
//! enumeration, Hochster depth and the dual regularity scan.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use sqfpow::homology::Budget;
use sqfpow::{betti, FieldSpec};
use sqfpow_bench::{path_complement, whiskered};

fn bench_squarefree_power(c: &mut Criterion) {
    let ideal = whiskered(6).edge_ideal();
    c.bench_function("squarefree_power/whiskered-1x6 k=3", |b| {
        b.iter_batched(
            || ideal.clone(),
            |ideal| ideal.squarefree_power(3),
            BatchSize::SmallInput,
        )
    });
}

fn bench_matchings(c: &mut Criterion) {
    let graph = whiskered(6);
    c.bench_function("k_matchings/whiskered-1x6 k=3", |b| {
        b.iter(|| graph.k_matchings(3).len())
    });
}

fn bench_depth(c: &mut Criterion) {
    let budget = Budget::default();
    let ideal = path_complement(8);
    c.bench_function("depth/path-complement-8", |b| {
        b.iter(|| betti::depth(&ideal, FieldSpec::Rationals, &budget).unwrap())
    });
    let square = whiskered(5).edge_ideal().squarefree_power(2);
    c.bench_function("depth/whiskered-1x5 square", |b| {
        b.iter(|| betti::depth(&square, FieldSpec::Rationals, &budget).unwrap())
    });
    c.bench_function("depth/whiskered-1x5 square GF(32003)", |b| {
        b.iter(|| betti::depth(&square, FieldSpec::Prime(32003), &budget).unwrap())
    });
}

fn bench_dual_regularity(c: &mut Criterion) {
    let budget = Budget::default();
    let ideal = path_complement(8);
    c.bench_function("dual_regularity/path-complement-8", |b| {
        b.iter(|| betti::dual_regularity(&ideal, FieldSpec::Rationals, &budget).unwrap())
    });
}

criterion_group!(
    benches,
    bench_squarefree_power,
    bench_matchings,
    bench_depth,
    bench_dual_regularity
);
criterion_main!(benches);
