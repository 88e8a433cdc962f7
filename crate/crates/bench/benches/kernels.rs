use criterion::{black_box, criterion_group, criterion_main, Criterion};

use quartinv_core::fixtures::printed;
use quartinv_core::gf2::MatrixGroup;
use quartinv_core::groebner::groebner_basis;
use quartinv_core::hilbert::{expand, molien_permutation};
use quartinv_core::invariants::{Ambient, Reproduction, Setting};
use quartinv_core::poly::{invariant_component, Polynomial, Ring};

fn group(c: &mut Criterion) {
    let s = Setting::embedded();
    let gens = s.natural.generators().to_vec();
    c.bench_function("closure of A, B", |b| b.iter(|| MatrixGroup::closure_from_generators(black_box(&gens)).unwrap()));
}

fn series(c: &mut Criterion) {
    let s = Setting::embedded();
    let census = s.permutations.cycle_census();
    c.bench_function("Molien series and 40 coefficients", |b| {
        b.iter(|| expand(&molien_permutation(black_box(&census)).unwrap(), 40).unwrap())
    });
}

fn components(c: &mut Criterion) {
    let s = Setting::embedded();
    let ring = Ambient::WPrime.ring();
    let mut g = c.benchmark_group("invariant component");
    for d in [4u32, 7] {
        g.bench_function(format!("degree {d}"), |b| b.iter(|| invariant_component(&s.on_quartic, &ring, black_box(d)).unwrap()));
    }
    g.finish();
}

fn groebner(c: &mut Criterion) {
    let omega = Ring::omega();
    let f: Vec<Polynomial> = printed::F_HAT.iter().map(|t| Polynomial::parse(t, &omega).unwrap()).collect();
    let mut g = c.benchmark_group("groebner");
    g.sample_size(10);
    g.bench_function("printed primaries", |b| b.iter(|| groebner_basis(black_box(&f)).unwrap()));
    g.finish();
}

fn pipeline(c: &mut Criterion) {
    let s = Setting::embedded();
    let mut g = c.benchmark_group("pipeline");
    g.sample_size(10);
    g.bench_function("full reproduction", |b| b.iter(|| Reproduction::run(black_box(&s)).unwrap()));
    g.finish();
}

criterion_group!(benches, group, series, components, groebner, pipeline);
criterion_main!(benches);
