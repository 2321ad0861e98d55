use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use maxmatch_bench::shapes;
use maxmatch_core::{compute_signs, psi};

fn bench_psi(c: &mut Criterion) {
    let mut group = c.benchmark_group("psi");
    group.sample_size(20);
    for n in [1_000, 10_000, 100_000] {
        group.throughput(Throughput::Elements(n as u64));
        for (name, tree) in shapes(n) {
            group.bench_with_input(BenchmarkId::new(name, n), &tree, |b, t| {
                b.iter(|| psi(black_box(t)))
            });
        }
    }
    group.finish();
}

fn bench_sign_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("sign_table");
    group.sample_size(20);
    for (name, tree) in shapes(10_000) {
        group.bench_function(name, |b| {
            b.iter(|| compute_signs(&black_box(&tree).root_at(0)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_psi, bench_sign_table);
criterion_main!(benches);
