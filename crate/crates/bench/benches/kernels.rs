use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use bearing_core::graph::is_laman_bruteforce;
use bearing_core::rigidity::random_configuration;
use bearing_core::{
    assemble_laplacian, henneberg_generate, is_bearing_rigid, is_laman_pebble, sym_eigen, Network,
    TolPolicy,
};

fn network(n: usize, d: usize) -> Network {
    let (g, _) = henneberg_generate(n, 7, 0.5).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    Network::new(g, random_configuration(&mut rng, n, d).unwrap()).unwrap()
}

fn eigen(c: &mut Criterion) {
    let mut group = c.benchmark_group("sym_eigen");
    for n in [6, 10, 20] {
        let lap = assemble_laplacian(&network(n, 3)).unwrap().matrix;
        group.bench_with_input(BenchmarkId::from_parameter(3 * n), &lap, |b, m| {
            b.iter(|| sym_eigen(black_box(m)).unwrap())
        });
    }
    group.finish();
}

fn laman(c: &mut Criterion) {
    let mut group = c.benchmark_group("laman");
    for n in [8, 12] {
        let (g, _) = henneberg_generate(n, 3, 0.5).unwrap();
        group.bench_with_input(BenchmarkId::new("pebble", n), &g, |b, g| {
            b.iter(|| is_laman_pebble(black_box(g)))
        });
        group.bench_with_input(BenchmarkId::new("subsets", n), &g, |b, g| {
            b.iter(|| is_laman_bruteforce(black_box(g)).unwrap())
        });
    }
    let (big, _) = henneberg_generate(200, 3, 0.5).unwrap();
    group.bench_function("pebble/200", |b| {
        b.iter(|| is_laman_pebble(black_box(&big)))
    });
    group.finish();
}

fn laplacian(c: &mut Criterion) {
    let net = network(20, 3);
    c.bench_function("assemble_laplacian/20x3", |b| {
        b.iter(|| assemble_laplacian(black_box(&net)).unwrap())
    });
    c.bench_function("is_bearing_rigid/20x3", |b| {
        b.iter(|| is_bearing_rigid(black_box(&net), TolPolicy::default()).unwrap())
    });
}

fn generate(c: &mut Criterion) {
    c.bench_function("henneberg_generate/100", |b| {
        b.iter(|| henneberg_generate(black_box(100), 5, 0.5).unwrap())
    });
}

criterion_group!(benches, eigen, laman, laplacian, generate);
criterion_main!(benches);
