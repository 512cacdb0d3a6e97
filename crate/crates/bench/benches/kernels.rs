use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use gupsqueeze::analytic::{squeezing_region_scan, variance_record};
use gupsqueeze::boson::verify_bch_collection;
use gupsqueeze::compare::{oracle_compare, CompareConfig};
use gupsqueeze::fock::{FockSpace, Oracle};
use gupsqueeze::scan::{default_tau_grid, default_theta_grid, sweep};
use gupsqueeze::PhysicalParams;
use gupsqueeze_bench::{sweep_grid, unit_amplitude};

fn algebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_bch");
    group.sample_size(10);
    for k in [6, 12] {
        group.bench_with_input(BenchmarkId::from_parameter(k), &k, |b, &k| {
            b.iter(|| verify_bch_collection(black_box(k)).unwrap())
        });
    }
    group.finish();
}

fn analytic(c: &mut Criterion) {
    let amp = unit_amplitude();
    let params = PhysicalParams::natural(1e-3).unwrap();
    c.bench_function("variance_record", |b| {
        b.iter(|| variance_record(black_box(2.5), &amp, &params).unwrap())
    });
    c.bench_function("region_scan_200x100", |b| {
        b.iter(|| squeezing_region_scan(1.0, default_tau_grid(), default_theta_grid()).unwrap())
    });
    let grid = sweep_grid(10);
    c.bench_function("sweep_10k", |b| b.iter(|| sweep(black_box(&grid)).unwrap()));
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle");
    group.sample_size(10);
    for n in [30, 60] {
        let space = FockSpace::new(n).unwrap();
        group.bench_with_input(BenchmarkId::new("diagonalize", n), &space, |b, &space| {
            b.iter(|| Oracle::new(space, PhysicalParams::natural(1e-3).unwrap()).unwrap())
        });
    }
    let cfg = CompareConfig::new(unit_amplitude(), vec![0.5, 1.0, 2.0, 4.0]);
    group.bench_function("compare_unit_amplitude", |b| b.iter(|| oracle_compare(&cfg).unwrap()));
    group.finish();
}

criterion_group!(benches, algebra, analytic, oracle);
criterion_main!(benches);
