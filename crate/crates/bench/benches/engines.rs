use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use gapreps::{
    compute_runs, maximal_gapped_repeats, maximal_subrepetitions, Engine, LceIndex, Rational,
};
use gapreps_bench::{seeded_word, SIZES};

fn repeats(c: &mut Criterion) {
    let mut group = c.benchmark_group("repeats_alpha2");
    group.sample_size(10);
    for n in SIZES {
        let w = seeded_word(n, 2, 1);
        group.throughput(Throughput::Elements(n as u64));
        group.bench_with_input(BenchmarkId::from_parameter(n), &w, |b, w| {
            b.iter(|| {
                maximal_gapped_repeats(black_box(w), Rational::from_integer(2), Engine::fast())
                    .unwrap()
            })
        });
    }
    group.finish();
}

fn subreps(c: &mut Criterion) {
    let mut group = c.benchmark_group("subreps_delta_half");
    group.sample_size(10);
    for n in [1 << 14, 1 << 16] {
        let w = seeded_word(n, 4, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &w, |b, w| {
            b.iter(|| {
                maximal_subrepetitions(black_box(w), Rational::new(1, 2), Engine::fast()).unwrap()
            })
        });
    }
    group.finish();
}

fn lce_and_runs(c: &mut Criterion) {
    let mut group = c.benchmark_group("runs");
    group.sample_size(10);
    for n in [1 << 14, 1 << 17] {
        let w = seeded_word(n, 2, 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &w, |b, w| {
            b.iter(|| {
                let idx = LceIndex::build(black_box(w));
                compute_runs(w, &idx).len()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, repeats, subreps, lce_and_runs);
criterion_main!(benches);
