use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use strongcol::{
    cartesian_product, cayley_strong_coloring, cycle, exact_chi_s, hypercube, path,
    random_tree_corpus, star, star_product_coloring, tree_cycle_coloring, tree_product_coloring,
    unitary_cayley, verify_strong,
};

fn exact(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_chi_s");
    let cases = [
        (
            "C6xP3",
            cartesian_product(&cycle(6).unwrap(), &path(3).unwrap()).unwrap(),
        ),
        ("Q4", hypercube(4).unwrap()),
        (
            "K13xK13",
            cartesian_product(&star(3).unwrap(), &star(3).unwrap()).unwrap(),
        ),
    ];
    for (name, g) in &cases {
        group.bench_with_input(BenchmarkId::from_parameter(name), g, |b, g| {
            b.iter(|| exact_chi_s(black_box(g), None).unwrap())
        });
    }
    group.finish();
}

fn constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("constructions");
    for n in [60u64, 210] {
        group.bench_with_input(BenchmarkId::new("cayley", n), &n, |b, &n| {
            b.iter(|| cayley_strong_coloring(black_box(n)).unwrap())
        });
    }
    group.bench_function("star_product_6_6", |b| {
        b.iter(|| star_product_coloring(6, 6).unwrap())
    });
    let trees = random_tree_corpus(2, 12, 6, 7).unwrap();
    group.bench_function("tree_product", |b| {
        b.iter(|| tree_product_coloring(black_box(&trees[0]), black_box(&trees[1])).unwrap())
    });
    for len in [6, 9, 10, 16] {
        group.bench_with_input(BenchmarkId::new("tree_cycle", len), &len, |b, &len| {
            b.iter(|| tree_cycle_coloring(black_box(&trees[0]), len).unwrap())
        });
    }
    group.finish();
}

fn verifier(c: &mut Criterion) {
    let g = unitary_cayley(210).unwrap();
    let coloring = cayley_strong_coloring(210).unwrap();
    c.bench_function("verify_strong_x210", |b| {
        b.iter(|| verify_strong(black_box(&g), black_box(&coloring)))
    });
}

criterion_group!(benches, exact, constructions, verifier);
criterion_main!(benches);
