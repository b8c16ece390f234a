use criterion::{criterion_group, criterion_main, Criterion};
use nary_core::filippov::{simple_fa, FiForm};
use nary_core::lie::{cocycle_from_invariant_poly, d_symbols, sun_generators};
use nary_core::lie_cohomology::cohomology_dims;
use nary_core::nary_cohomology::{fa_cohomology_dims, FaComplex};
use nary_core::poisson::{gps_check, np_check, PolyMultivector};
use nary_core::{GLAlgebra, Representation};
use std::hint::black_box;

fn lie_kernels(c: &mut Criterion) {
    let su3 = sun_generators(3);
    c.bench_function("su3 jacobi", |b| b.iter(|| black_box(&su3.algebra).check_jacobi()));
    c.bench_function("su3 killing form", |b| b.iter(|| black_box(&su3.algebra).killing_form()));
    let ad = Representation::adjoint(&su3.algebra);
    c.bench_function("su3 adjoint cohomology up to 2", |b| {
        b.iter(|| cohomology_dims(black_box(&su3.algebra), &ad, 2).unwrap())
    });
}

fn filippov_kernels(c: &mut Criterion) {
    let a5 = simple_fa(4, &[1; 5]).unwrap();
    for form in FiForm::ALL {
        c.bench_function(&format!("A5 FI {}", form.name()), |b| b.iter(|| black_box(&a5).check_fi(form)));
    }
    let a4 = simple_fa(3, &[1; 4]).unwrap();
    c.bench_function("A4 deformation cohomology up to 1", |b| {
        b.iter(|| fa_cohomology_dims(black_box(&a4), &FaComplex::Deformation, 1).unwrap())
    });
}

fn gla_kernels(c: &mut Criterion) {
    let su3 = sun_generators(3);
    let w5 = cocycle_from_invariant_poly(&su3.algebra, &d_symbols(&su3)).unwrap();
    let g = nary_core::gla::gla_from_cocycle(&su3.algebra, &w5).unwrap();
    c.bench_function("su3 4-bracket GJI", |b| b.iter(|| GLAlgebra::check_gji(black_box(&g))));
}

fn poisson_kernels(c: &mut Criterion) {
    let su3 = sun_generators(3);
    let w5 = cocycle_from_invariant_poly(&su3.algebra, &d_symbols(&su3)).unwrap();
    let gps4 = nary_core::poisson::linear_gps_from_cocycle(&su3.algebra, &w5).unwrap();
    c.bench_function("su3 linear 4-vector GPS", |b| b.iter(|| gps_check(black_box(&gps4)).unwrap()));
    let a4 = PolyMultivector::linear_from_bracket(simple_fa(3, &[1; 4]).unwrap().bracket());
    c.bench_function("A4 linear 3-vector NP", |b| b.iter(|| np_check(black_box(&a4)).unwrap()));
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = lie_kernels, filippov_kernels, gla_kernels, poisson_kernels
}
criterion_main!(benches);
