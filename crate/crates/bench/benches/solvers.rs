use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use apgroups::families::{build_family, family_theta, FamilyId};
use apgroups::graph::max_noncommuting_set;
use apgroups::partition::exact_theta;
use apgroups_bench::{a5, d60, d6xd6};

fn bench_clique(c: &mut Criterion) {
    let a5 = a5();
    let d60 = d60();
    c.bench_function("clique/a5", |b| {
        b.iter(|| max_noncommuting_set(black_box(&a5)).unwrap().size)
    });
    c.bench_function("clique/d60", |b| {
        b.iter(|| max_noncommuting_set(black_box(&d60)).unwrap().size)
    });
}

fn bench_exact_theta(c: &mut Criterion) {
    let d60 = d60();
    let a5 = a5();
    let nap = d6xd6();
    c.bench_function("exact_theta/d60", |b| {
        b.iter(|| exact_theta(black_box(&d60)).unwrap().value)
    });
    c.bench_function("exact_theta/a5", |b| {
        b.iter(|| exact_theta(black_box(&a5)).unwrap().value)
    });
    c.bench_function("exact_theta/d6xd6_refute", |b| {
        b.iter(|| exact_theta(black_box(&nap)).unwrap().value)
    });
}

fn bench_construction(c: &mut Criterion) {
    let id = FamilyId::parse("psl2:11").unwrap();
    c.bench_function("closure/psl2_11", |b| {
        b.iter(|| build_family(black_box(&id)).unwrap().size())
    });
    let sid = FamilyId::parse("psl2:13").unwrap();
    c.bench_function("family_theta/psl2_13", |b| {
        b.iter(|| family_theta(black_box(&sid)).unwrap().value)
    });
}

criterion_group!(benches, bench_clique, bench_exact_theta, bench_construction);
criterion_main!(benches);
