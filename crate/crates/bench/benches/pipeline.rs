use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use tilderep::algebra::{leq_l_poset, verify_isomorphism};
use tilderep::rep::{cartan_matrix_ei, specht_module, RepContext};
use tilderep::semigroup::GreenData;
use tilderep::young::{character_table, partitions_of};
use tilderep::zoo::pt_n;
use tilderep_bench::zoo_ehresmann;

fn green(c: &mut Criterion) {
    let mut group = c.benchmark_group("green");
    for n in [3usize, 4] {
        let b = pt_n(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(format!("pt{n}")), &b, |bench, b| {
            bench.iter(|| GreenData::compute(black_box(b.base())))
        });
    }
    group.finish();
}

fn isomorphism(c: &mut Criterion) {
    let mut group = c.benchmark_group("isomorphism");
    group.sample_size(10);
    for name in ["pt2", "is3", "pt3"] {
        let e = zoo_ehresmann(name);
        group.bench_function(name, |bench| {
            bench.iter(|| {
                let poset = leq_l_poset(&e).unwrap();
                verify_isomorphism(black_box(&e), &poset).is_isomorphism()
            })
        });
    }
    group.finish();
}

fn representations(c: &mut Criterion) {
    let mut group = c.benchmark_group("representations");
    group.sample_size(10);
    for name in ["pt2", "pt3"] {
        let e = zoo_ehresmann(name);
        group.bench_function(format!("{name}/projectives"), |bench| {
            bench.iter(|| RepContext::new(black_box(&e)).unwrap().projective_modules().unwrap())
        });
        group.bench_function(format!("{name}/cartan"), |bench| {
            bench.iter(|| cartan_matrix_ei(&RepContext::new(black_box(&e)).unwrap()).unwrap())
        });
    }
    group.finish();
}

fn characters(c: &mut Criterion) {
    c.bench_function("character_table/s6", |bench| bench.iter(|| character_table(black_box(6))));
    c.bench_function("specht_modules/s4", |bench| {
        bench.iter(|| partitions_of(4).iter().map(specht_module).map(|m| m.dim()).sum::<usize>())
    });
}

criterion_group!(benches, green, isomorphism, representations, characters);
criterion_main!(benches);
