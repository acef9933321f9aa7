use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ppwin_core::arith::{is_prime, primes_in_range, SegmentedSieve};
use ppwin_core::expsums::{classical_poly, damped_poly, ClassicalParams, ExpSumKind};
use ppwin_core::repcount::rep_window_total;
use ppwin_core::verify::QuadratureGrid;
use ppwin_core::{ProblemConfig, Variant};

fn primality(c: &mut Criterion) {
    c.bench_function("is_prime 1000 odd values near 2^62", |b| {
        let start = (1u64 << 62) + 1;
        b.iter(|| (0..1000u64).filter(|i| is_prime(black_box(start + 2 * i))).count())
    });
}

fn sieve(c: &mut Criterion) {
    let mut g = c.benchmark_group("sieve");
    g.bench_function("segment of 10^6 at 10^12", |b| {
        b.iter(|| primes_in_range(black_box(1_000_000_000_000), 1_000_000_000_000 + 1_000_000).count())
    });
    g.bench_function("stream 10^7 in 2^20 segments", |b| {
        let s = SegmentedSieve::with_segment_size(10_000_000, 1 << 20);
        b.iter(|| s.segments(2, black_box(10_000_000)).map(|seg| seg.count()).sum::<usize>())
    });
    g.finish();
}

fn windows(c: &mut Criterion) {
    let mut g = c.benchmark_group("rep_window_total");
    g.sample_size(10);
    for (variant, l1, l2) in [(Variant::RppFull, 2, 2), (Variant::RppFull, 2, 3), (Variant::RpFull, 3, 2)] {
        let cfg = ProblemConfig::full(variant, l1, l2, 100_000_000, 1_000_000);
        g.bench_with_input(BenchmarkId::new(variant.as_str(), format!("{l1},{l2}")), &cfg, |b, cfg| {
            b.iter(|| rep_window_total(black_box(cfg)).unwrap())
        });
    }
    g.finish();
}

fn expsums(c: &mut Criterion) {
    let mut g = c.benchmark_group("expsums");
    let v = classical_poly(ExpSumKind::V, 2, &ClassicalParams::new(100_000_000, f64::INFINITY, 1)).unwrap();
    g.bench_function("V_2 at one alpha, N = 10^8", |b| b.iter(|| v.eval(black_box(0.123_456))));
    let omega = damped_poly(ExpSumKind::Omega, 2, 10_000, 1e-16).unwrap();
    let grid = QuadratureGrid::new(4096).unwrap();
    g.bench_function("omega_2 on a 4096-node grid, N = 10^4", |b| b.iter(|| grid.eval_poly(black_box(&omega.poly))));
    g.finish();
}

criterion_group!(benches, primality, sieve, windows, expsums);
criterion_main!(benches);
