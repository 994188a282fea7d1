//! Parallel vs sequential comparison on the hot kernels: polynomial matrix
//! products (the inner loop of the symbolic characteristic polynomial),
//! flatness validation sweeps, sampling oracles, and whole verification
//! grid cells.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use affine_lie::catalog::{
    ln_connection, ln_representation, verify_grid_par, verify_grid_seq, LnFamilyParams,
};
use affine_lie::connection::{flatness_violation_par, flatness_violation_seq};
use affine_lie::rat;

fn params(n: usize) -> LnFamilyParams {
    LnFamilyParams::new(n, rat!(1 / 2), rat!(-1), rat!(1)).unwrap()
}

fn bench_poly_matrix_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("poly_matrix_mul");
    for n in [6, 8] {
        let rep = ln_representation(&params(n)).unwrap();
        let generic = rep.generic_matrix();
        let square = generic.mul_seq(&generic);
        group.bench_with_input(BenchmarkId::new("seq", n), &n, |b, _| {
            b.iter(|| generic.mul_seq(&square))
        });
        group.bench_with_input(BenchmarkId::new("par", n), &n, |b, _| {
            b.iter(|| generic.mul_par(&square))
        });
    }
    group.finish();
}

fn bench_flatness_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("flatness_scan");
    for n in [6, 8] {
        let conn = ln_connection(&params(n)).unwrap();
        let algebra = conn.algebra().clone();
        let gamma = conn.gamma_tensor().clone();
        group.bench_with_input(BenchmarkId::new("seq", n), &n, |b, _| {
            b.iter(|| flatness_violation_seq(&algebra, &gamma))
        });
        group.bench_with_input(BenchmarkId::new("par", n), &n, |b, _| {
            b.iter(|| flatness_violation_par(&algebra, &gamma))
        });
    }
    group.finish();
}

fn bench_sampling_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("completeness_sampling");
    let conn = ln_connection(&LnFamilyParams::new(6, rat!(0), rat!(1), rat!(-1)).unwrap()).unwrap();
    group.bench_function("par_dispatch_200", |b| {
        b.iter(|| {
            assert!(conn.sampled_incompleteness_witness(0, 200).is_none());
        })
    });
    // Sequential baseline: the same 200 right-operator nilpotency checks.
    let samples = affine_lie::sampling::rational_samples(0, 200, 6);
    group.bench_function("seq_200", |b| {
        b.iter(|| {
            for x in &samples {
                let r = conn.right_operator(x).unwrap();
                assert!(r.is_nilpotent().unwrap());
            }
        })
    });
    group.finish();
}

fn bench_verify_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_grid");
    group.sample_size(10);
    let values = [rat!(0), rat!(1), rat!(-1), rat!(1 / 2)];
    let cells: Vec<LnFamilyParams> = values
        .iter()
        .map(|a| LnFamilyParams::new(5, a.clone(), rat!(1), rat!(-1)).unwrap())
        .collect();
    group.bench_function("seq", |b| b.iter(|| verify_grid_seq(&cells)));
    group.bench_function("par", |b| b.iter(|| verify_grid_par(&cells)));
    group.finish();
}

criterion_group!(
    benches,
    bench_poly_matrix_mul,
    bench_flatness_scan,
    bench_sampling_oracle,
    bench_verify_grid
);
criterion_main!(benches);
