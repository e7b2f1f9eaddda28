use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::Rng;
use std::hint::black_box;
use stratquant_core::fock::invariant_basis;
use stratquant_core::poisson::PresentedPoissonAlgebra;
use stratquant_core::repcount::oracle_dim;
use stratquant_core::{sample, Matrix};

fn rank(c: &mut Criterion) {
    let mut g = c.benchmark_group("exact_rank");
    for n in [6usize, 12, 18] {
        let mut rng = sample::rng(n as u64);
        let rows: Vec<Vec<i64>> = (0..n).map(|_| (0..n).map(|_| rng.random_range(-9..=9)).collect()).collect();
        let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
        let m = Matrix::from_ints(&refs);
        g.bench_with_input(BenchmarkId::from_parameter(n), &m, |b, m| b.iter(|| black_box(m.rank())));
    }
    g.finish();
}

fn normal_form(c: &mut Criterion) {
    let alg = PresentedPoissonAlgebra::semicone();
    let mut rng = sample::rng(7);
    let p = sample::poly(&mut rng, alg.vars(), 6, 12, false);
    let q = sample::poly(&mut rng, alg.vars(), 6, 12, false);
    let prod = &p * &q;
    c.bench_function("semicone_normal_form", |b| b.iter(|| black_box(alg.normal_form(&prod))));
    c.bench_function("semicone_bracket", |b| b.iter(|| black_box(alg.bracket(&p, &q).unwrap())));
}

fn basis(c: &mut Criterion) {
    let mut g = c.benchmark_group("invariant_basis");
    g.sample_size(10);
    for (s, l, k) in [(2, 2, 4), (3, 3, 3), (3, 3, 4)] {
        g.bench_function(format!("s{s}_l{l}_k{k}"), |b| b.iter(|| black_box(invariant_basis(s, l, k).unwrap().len())));
    }
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let mut g = c.benchmark_group("oracle_dim");
    g.sample_size(10);
    for (s, l, k) in [(2, 2, 4), (3, 3, 4)] {
        g.bench_function(format!("s{s}_l{l}_k{k}"), |b| b.iter(|| black_box(oracle_dim(s, l, k, 1729).unwrap())));
    }
    g.finish();
}

criterion_group!(benches, rank, normal_form, basis, oracle);
criterion_main!(benches);
