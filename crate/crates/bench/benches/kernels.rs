use criterion::{black_box, criterion_group, criterion_main, Criterion};
use master_kernels::catalog::{self, Params};
use master_kernels::numerics::{dilog, gamma, ln_gamma_real};
use master_kernels::quadrature::{integrate_real_line_auto, QuadratureOptions};
use master_kernels::{ComplexValue, KernelSpec};

fn special_functions(c: &mut Criterion) {
    c.bench_function("gamma complex", |b| b.iter(|| gamma(black_box(ComplexValue::new(2.3, 1.7)))));
    c.bench_function("ln_gamma real", |b| b.iter(|| ln_gamma_real(black_box(37.25))));
    c.bench_function("dilog", |b| b.iter(|| dilog(black_box(0.83))));
}

fn kernels(c: &mut Criterion) {
    let k = KernelSpec::SinhP { p: 2.5 };
    c.bench_function("kernel census p=2.5", |b| b.iter(|| black_box(&k).poles_in_strip()));
}

fn quadrature(c: &mut Criterion) {
    let o = QuadratureOptions::default();
    c.bench_function("tanh-sinh sech(πx)", |b| {
        b.iter(|| integrate_real_line_auto(|x: f64| Ok(ComplexValue::new(1.0 / (std::f64::consts::PI * x).cosh(), 0.0)), &o))
    });
}

fn verification(c: &mut Criterion) {
    let o = QuadratureOptions::default();
    let p = Params::new();
    for id in ["FCOSH", "GAUSS-COS", "ZS-COS", "GAMMA-SERIES"] {
        c.bench_function(&format!("verify {id}"), |b| b.iter(|| catalog::verify(id, &p, &o)));
    }
}

criterion_group!(benches, special_functions, kernels, quadrature, verification);
criterion_main!(benches);
