use criterion::{black_box, criterion_group, criterion_main, Criterion};
use sagbi_bench::{
    sg_two_generators, syzygies_three_generators, two_pass_sagbi, univariate_wide, Workload,
};
use sagbi_core::grobner::evaluation_kernel;
use sagbi_core::{
    groebner_basis, sagbi_construct, sg_construct, subset_syzygy_generators, SubalgebraPresentation,
};

fn ambient(w: &Workload) -> SubalgebraPresentation<sagbi_core::Integer> {
    sagbi_construct(&w.ring, &w.f, 8)
        .expect("valid workload")
        .basis
}

fn sagbi(c: &mut Criterion) {
    let w = two_pass_sagbi();
    c.bench_function("sagbi_construct/two_pass", |b| {
        b.iter(|| sagbi_construct(&w.ring, black_box(&w.f), 8).unwrap())
    });
    let f = ambient(&w);
    let leading = f.leading_terms();
    c.bench_function("evaluation_kernel/leading_terms", |b| {
        b.iter(|| evaluation_kernel(black_box(&leading), &w.ring).unwrap())
    });
    let tags = f.tag_ring();
    let kernel = evaluation_kernel(f.generators(), &w.ring).unwrap();
    let gens = kernel.generators().to_vec();
    c.bench_function("groebner_basis/kernel_over_z", |b| {
        b.iter(|| groebner_basis(&tags, black_box(&gens)).unwrap())
    });
}

fn sg(c: &mut Criterion) {
    for (w, passes) in [(sg_two_generators(), 4), (univariate_wide(), 1)] {
        let f = ambient(&w);
        c.bench_function(&format!("sg_construct/{}", w.name), |b| {
            b.iter(|| sg_construct(black_box(&w.g), &f, passes).unwrap())
        });
    }
    let w = syzygies_three_generators();
    let f = ambient(&w);
    c.bench_function("subset_syzygy_generators/three", |b| {
        b.iter(|| subset_syzygy_generators(black_box(&w.g), &f, 4).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = sagbi, sg
}
criterion_main!(benches);
