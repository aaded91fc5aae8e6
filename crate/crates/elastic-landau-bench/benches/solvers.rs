use criterion::{criterion_group, criterion_main, Criterion};
use elastic_landau::hardwall::{energy_exact, WallConfig};
use elastic_landau::model::{Spin, StateLabel, SystemParams};
use elastic_landau::oracle::{discretize_radial, lowest_eigenvalues, RadialGrid};
use elastic_landau::specfun::{kummer_m, ln_gamma};
use elastic_landau::{geometry, spectrum};
use std::hint::black_box;

fn params(omega: f64, phi: f64) -> SystemParams {
    SystemParams::new(1.0, 0.0, 0.0, 1.0, Spin::Up, omega)
        .unwrap()
        .with_phi_ac(phi)
}

fn bench_specfun(c: &mut Criterion) {
    c.bench_function("ln_gamma mid-range", |b| {
        b.iter(|| ln_gamma(black_box(42.5)).unwrap())
    });
    c.bench_function("kummer_m terminating n=20", |b| {
        b.iter(|| kummer_m(black_box(-20.0), 1.3, 4.0).unwrap())
    });
    c.bench_function("kummer_m oscillatory a=-500", |b| {
        b.iter(|| kummer_m(black_box(-500.0), 1.3, 0.05).unwrap())
    });
}

fn bench_eigensolver(c: &mut Criterion) {
    let p = params(0.05, 1.8849555921538759);
    let grid = RadialGrid::new(2000, 33.25, false).unwrap();
    let op = discretize_radial(0.3, &p, &grid);
    c.bench_function("sturm 3 eigenvalues N=2000", |b| {
        b.iter(|| lowest_eigenvalues(black_box(&op), 3).unwrap())
    });
}

fn bench_hardwall_root(c: &mut Criterion) {
    let p = params(0.0005, 1.8849555921538759);
    let w = WallConfig::new(10.0).unwrap();
    let state = StateLabel::new(2, 0, Spin::Up);
    c.bench_function("hardwall exact root n=2", |b| {
        b.iter(|| energy_exact(black_box(state), &p, &w).unwrap())
    });
}

fn bench_tables_and_geometry(c: &mut Criterion) {
    let p = params(0.1, 0.9);
    c.bench_function("spectrum table 5x11x2", |b| {
        b.iter(|| spectrum::spectrum_table(4, -5, 5, &Spin::both(), black_box(&p)).unwrap())
    });
    c.bench_function("torsion decomposition", |b| {
        b.iter(|| {
            let t = geometry::torsion_two_form(black_box(2.0), 0.1, 2e-5).unwrap();
            geometry::decompose_torsion(2.0, 0.1, &t).unwrap()
        })
    });
}

criterion_group!(
    benches,
    bench_specfun,
    bench_eigensolver,
    bench_hardwall_root,
    bench_tables_and_geometry
);
criterion_main!(benches);
