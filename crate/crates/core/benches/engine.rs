use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use trigonal_core::curvelab::{curve_ideal_fast, sample_curve, AmbientCoordinates};
use trigonal_core::exactalg::{PolyRing, Polynomial, PrimeField};
use trigonal_core::groebner::{buchberger_with, GroebnerBasis};
use trigonal_core::par::Exec;
use trigonal_core::resolution::free_resolution_with;
use trigonal_core::scrollgeom::scroll_data;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn curve_ideal(g: i64, n: i64, m: i64) -> (PolyRing, Vec<Polynomial>) {
    let s = scroll_data(g, n, m).unwrap();
    let c = sample_curve(&s, PrimeField::default(), 1, false).unwrap();
    let amb = AmbientCoordinates::new(&s, c.field);
    (amb.ring().clone(), curve_ideal_fast(&c).unwrap())
}

fn groebner(c: &mut Criterion) {
    let mut group = c.benchmark_group("buchberger");
    group.sample_size(10);
    for (g, n, m) in [(9, 1, 3), (11, 2, 3)] {
        let (ring, gens) = curve_ideal(g, n, m);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, format!("g{g}n{n}")), &gens, |b, gens| {
                b.iter(|| buchberger_with(&ring, gens, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn resolution(c: &mut Criterion) {
    let mut group = c.benchmark_group("free_resolution");
    group.sample_size(10);
    for (g, n, m) in [(9, 1, 3), (11, 2, 3)] {
        let (ring, gens) = curve_ideal(g, n, m);
        let gb: GroebnerBasis = buchberger_with(&ring, &gens, Exec::Sequential).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, format!("g{g}n{n}")), &gb, |b, gb| {
                b.iter(|| free_resolution_with(gb, ring.nvars(), exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, groebner, resolution);
criterion_main!(benches);
