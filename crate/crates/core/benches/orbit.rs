//! Benchmarks for the breadth-first orbit machinery: rayon-parallel frontier
//! expansion against the sequential fallback, plus the normal-form kernel
//! they both lean on.
//!
//! Run `cargo bench -p braidmono` (parallel expansion) and compare with
//! `cargo bench -p braidmono --no-default-features` to measure the fallback
//! build; within one run the `orbit/*` groups compare both code paths
//! directly.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use braidmono::factorization::Factorization;
use braidmono::garside::normal_form;
use braidmono::search::{
    enumerate_orbit, enumerate_orbit_sequential, hurwitz_equivalent, EquivOptions, SearchLimits,
};
use braidmono::BraidWord;

fn bench_orbit_enumeration(c: &mut Criterion) {
    let f0 = Factorization::standard(3).unwrap();
    let mut group = c.benchmark_group("orbit");
    group.sample_size(10);
    for cap in [250usize, 1000] {
        let limits = SearchLimits {
            max_states: cap,
            ..SearchLimits::default()
        };
        group.bench_with_input(BenchmarkId::new("parallel", cap), &limits, |b, limits| {
            b.iter(|| enumerate_orbit(black_box(&f0), limits).unwrap().len())
        });
        group.bench_with_input(
            BenchmarkId::new("sequential", cap),
            &limits,
            |b, limits| {
                b.iter(|| enumerate_orbit_sequential(black_box(&f0), limits).unwrap().len())
            },
        );
    }
    group.finish();
}

fn bench_scramble_recognition(c: &mut Criterion) {
    let f0 = Factorization::standard(3).unwrap();
    let scrambled = f0.scramble(200, 5).unwrap();
    let mut group = c.benchmark_group("equiv");
    group.sample_size(10);
    group.bench_function("scramble-200", |b| {
        b.iter(|| {
            hurwitz_equivalent(
                black_box(&f0),
                black_box(&scrambled),
                &EquivOptions::default(),
                &SearchLimits::default(),
            )
            .unwrap()
        })
    });
    group.finish();
}

fn bench_normal_form(c: &mut Criterion) {
    let word = BraidWord::new(
        5,
        (0..60)
            .map(|i| {
                let g = (i % 4) as i32 + 1;
                if i % 3 == 0 {
                    -g
                } else {
                    g
                }
            })
            .collect(),
    )
    .unwrap();
    c.bench_function("normal-form/len-60", |b| {
        b.iter(|| normal_form(black_box(&word)))
    });
}

criterion_group!(
    benches,
    bench_orbit_enumeration,
    bench_scramble_recognition,
    bench_normal_form
);
criterion_main!(benches);
