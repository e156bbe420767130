use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_rational::BigRational;
use partial_orient::census::MoveSet;
use partial_orient::{
    brute_count, canonical_rep, mc_cutminimal, mc_subgraph, orbit_scan, McConfig, MinimalClass, Multigraph,
    OrientationClass, ReferencePair, StateSpace,
};

fn census(c: &mut Criterion) {
    let k4 = Multigraph::complete(4).unwrap();
    let pair = ReferencePair::default_for(&k4);
    let mut group = c.benchmark_group("census_k4");
    group.sample_size(10);
    for class in [OrientationClass::Acyclic, OrientationClass::StronglyConnected, OrientationClass::CyclePathMinimal] {
        group.bench_with_input(BenchmarkId::new("brute_count", class), &class, |b, &class| {
            b.iter(|| brute_count(&k4, class, &pair, 1, 1).unwrap())
        });
    }
    for (name, moves) in [("cut", MoveSet::CUT), ("cycle_pivot", MoveSet::CYCLE_PIVOT)] {
        group.bench_with_input(BenchmarkId::new("orbit_scan", name), &moves, |b, &moves| {
            b.iter(|| orbit_scan(&k4, moves).unwrap())
        });
    }
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let k4 = Multigraph::complete(4).unwrap();
    let pair = ReferencePair::default_for(&k4);
    let states: Vec<_> = StateSpace::new(k4.m()).iter().collect();
    let mut group = c.benchmark_group("canonical_all_k4_states");
    group.sample_size(10);
    for class in MinimalClass::ALL {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{class:?}")), &class, |b, &class| {
            b.iter(|| {
                for o in &states {
                    black_box(canonical_rep(&k4, o, &pair, class).unwrap());
                }
            })
        });
    }
    group.finish();
}

fn monte_carlo(c: &mut Criterion) {
    let k4 = Multigraph::complete(4).unwrap();
    let pair = ReferencePair::default_for(&k4);
    let cfg = McConfig {
        trials: 10_000,
        seed: 1,
        p: BigRational::new(1.into(), 3.into()),
    };
    let mut group = c.benchmark_group("reliability_k4_10k");
    group.sample_size(10);
    group.bench_function("mc_subgraph", |b| b.iter(|| mc_subgraph(&k4, &cfg).unwrap()));
    group.bench_function("mc_cutminimal", |b| b.iter(|| mc_cutminimal(&k4, &cfg, &pair).unwrap()));
    group.finish();
}

criterion_group!(benches, census, canonical, monte_carlo);
criterion_main!(benches);
