use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use perfover::factorize::{enumerate_ordered_factorizations, f_total, f_v_formula};
use perfover::overperfect::{count_pop_closed, count_pop_total, enumerate_perfect_overpartitions};
use perfover::{FactorCounter, Overlines};

fn ordered_factorizations(c: &mut Criterion) {
    let mut g = c.benchmark_group("f(N)");
    for n in [480u64, 30_240, 1_048_576, 735_134_400] {
        g.bench_with_input(BenchmarkId::new("recurrence", n), &n, |b, &n| {
            b.iter(|| f_total(black_box(n)))
        });
    }
    for n in [480u64, 30_240] {
        g.bench_with_input(BenchmarkId::new("enumeration", n), &n, |b, &n| {
            b.iter(|| {
                enumerate_ordered_factorizations(black_box(n))
                    .unwrap()
                    .count()
            })
        });
    }
    g.finish();
}

fn factorizations_by_twos(c: &mut Criterion) {
    let mut g = c.benchmark_group("f_v(N)");
    let n = 15u64 << 20;
    for v in [0u32, 10, 19] {
        g.bench_with_input(BenchmarkId::new("recurrence", v), &v, |b, &v| {
            b.iter(|| FactorCounter::new().twos(black_box(n), v))
        });
        g.bench_with_input(BenchmarkId::new("closed", v), &v, |b, &v| {
            b.iter(|| f_v_formula(black_box(n), v))
        });
    }
    g.finish();
}

fn perfect_overpartitions(c: &mut Criterion) {
    let mut g = c.benchmark_group("pop(n)");
    for n in [479u64, 30_239, 1_048_575] {
        g.bench_with_input(BenchmarkId::new("binomial-sum", n), &n, |b, &n| {
            b.iter(|| count_pop_total(black_box(n)))
        });
        g.bench_with_input(BenchmarkId::new("closed, r = 2", n), &n, |b, &n| {
            b.iter(|| count_pop_closed(black_box(n), 2))
        });
    }
    g.bench_function("construction/479", |b| {
        b.iter(|| enumerate_perfect_overpartitions(black_box(479), Overlines::All).count())
    });
    g.finish();
}

fn sequence_prefix(c: &mut Criterion) {
    c.bench_function("pop(1..=1000) shared memo", |b| {
        b.iter(|| {
            let mut counter = FactorCounter::new();
            (1..=1000u64)
                .map(|n| perfover::overperfect::count_pop_total_with(&mut counter, n))
                .count()
        })
    });
}

criterion_group!(
    benches,
    ordered_factorizations,
    factorizations_by_twos,
    perfect_overpartitions,
    sequence_prefix
);
criterion_main!(benches);
