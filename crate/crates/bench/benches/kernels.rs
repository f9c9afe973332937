use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use onebranch_core::{
    complex_hom_k_dim, coxeter_matrix, coxeter_polynomial, extension_poset, nakayama_cartan, projective_resolution,
    rectangle_poset, tilting_family, verify_tilting, ExtensionVariant, LadderSpec, TiltingFamily,
};

fn char_poly(c: &mut Criterion) {
    let mut g = c.benchmark_group("char_poly");
    for u in [3, 5, 7] {
        let phi = coxeter_matrix(&rectangle_poset(u).unwrap().cartan().unwrap()).unwrap();
        g.bench_with_input(BenchmarkId::new("rectangle_coxeter", 2 * u), &phi, |b, m| b.iter(|| m.char_poly()));
    }
    g.finish();
}

fn coxeter(c: &mut Criterion) {
    let mut g = c.benchmark_group("coxeter_polynomial");
    for (u, v) in [(3, 2), (5, 4)] {
        let cartan = extension_poset(u, v, ExtensionVariant::LowerOut).unwrap().cartan().unwrap();
        g.bench_with_input(BenchmarkId::new("extension", format!("{u}x{v}")), &cartan, |b, m| {
            b.iter(|| coxeter_polynomial(black_box(m)).unwrap())
        });
    }
    for (n, r) in [(12, 5), (20, 8)] {
        let cartan = nakayama_cartan(n, r).unwrap();
        g.bench_with_input(BenchmarkId::new("nakayama", format!("{n},{r}")), &cartan, |b, m| {
            b.iter(|| coxeter_polynomial(black_box(m)).unwrap())
        });
    }
    g.finish();
}

fn homotopy(c: &mut Criterion) {
    let spec = LadderSpec::projective(9, 5).unwrap();
    let x = projective_resolution(spec, 6, 4).unwrap();
    let y = projective_resolution(spec, 7, 3).unwrap();
    c.bench_function("complex_hom_k_dim", |b| {
        b.iter(|| (-2..=2).map(|k| complex_hom_k_dim(&x, &y, k).unwrap()).sum::<usize>())
    });

    let mut g = c.benchmark_group("verify_tilting");
    g.sample_size(10);
    for which in TiltingFamily::ALL {
        let family = tilting_family(2, 2, which).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(which), &family, |b, f| b.iter(|| verify_tilting(f).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, char_poly, coxeter, homotopy);
criterion_main!(benches);
