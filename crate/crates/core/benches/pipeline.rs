//! Parallel core against a single-worker pool on the main pipeline stages.
//! Build with `--no-default-features` for the rayon-free sequential path.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use theta_forge::construct::{
    audit_max_secant, build_norm_set, AuditStrategy, ConstructionParams, PointSet,
};
use theta_forge::gf::Gf;
use theta_forge::linrep::{build_linear_representation, IncidenceGraph, LinrepConfig};
use theta_forge::verify::{find_c4, girth, verify_theta_free, ThetaOptions};

fn norm_set(t: usize, q: u64) -> PointSet {
    let params = ConstructionParams::new(Gf::new(q, 0).unwrap(), t).unwrap();
    build_norm_set(&params, 0)
        .unwrap()
        .set
        .audited(AuditStrategy::PairHistogram)
        .unwrap()
}

fn graph(t: usize, q: u64) -> IncidenceGraph {
    build_linear_representation(&norm_set(t, q), &LinrepConfig::default()).unwrap()
}

fn pools() -> [(&'static str, Option<usize>); 2] {
    [("1-thread", Some(1)), ("pool", None)]
}

fn bench_audit(c: &mut Criterion) {
    let set = norm_set(3, 5);
    let mut group = c.benchmark_group("audit_t3_q5");
    for (name, jobs) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| theta_forge::with_jobs(jobs, || audit_max_secant(black_box(&set))))
        });
    }
    group.finish();
}

fn bench_build(c: &mut Criterion) {
    let set = norm_set(3, 4);
    let mut group = c.benchmark_group("linrep_t3_q4");
    group.sample_size(20);
    for (name, jobs) in pools() {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                theta_forge::with_jobs(jobs, || {
                    build_linear_representation(black_box(&set), &LinrepConfig::default())
                })
            })
        });
    }
    group.finish();
}

fn bench_verify(c: &mut Criterion) {
    let g = graph(3, 4);
    let small = graph(2, 4);
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    for (name, jobs) in pools() {
        group.bench_function(BenchmarkId::new("theta_t3_q4", name), |b| {
            b.iter(|| {
                theta_forge::with_jobs(jobs, || {
                    verify_theta_free(g.graph(), 3, ThetaOptions::default())
                })
            })
        });
        group.bench_function(BenchmarkId::new("theta_exact_t2_q4", name), |b| {
            b.iter(|| {
                theta_forge::with_jobs(jobs, || {
                    verify_theta_free(small.graph(), 2, ThetaOptions { exact_stats: true })
                })
            })
        });
        group.bench_function(BenchmarkId::new("c4_t3_q4", name), |b| {
            b.iter(|| theta_forge::with_jobs(jobs, || find_c4(g.graph())))
        });
        group.bench_function(BenchmarkId::new("girth_t2_q4", name), |b| {
            b.iter(|| theta_forge::with_jobs(jobs, || girth(small.graph())))
        });
    }
    group.finish();
}

criterion_group!(benches, bench_audit, bench_build, bench_verify);
criterion_main!(benches);
