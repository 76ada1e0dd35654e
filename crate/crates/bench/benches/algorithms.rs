use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use matfin::battery;
use matfin::envalg::basis_env_algebra;
use matfin::finiteness::{find_admissible, is_finite, specialize, specialized_over, Exclusions};
use matfin::io::commands::{order_report, OrderOptions};
use matfin::oracle::closure_oracle;
use matfin::order::{group_order_ff, Engine};
use matfin::{Env, Trace};

fn decision(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_finite");
    for bg in battery::decision_battery().into_iter().filter(|g| {
        ["monomial-gl35", "signed-permutations-6", "kronecker-transcendental", "monomial-plus-diagonal"]
            .contains(&g.name.as_str())
    }) {
        let g = bg.group();
        let env = Env::new(g.ff.clone());
        group.bench_function(bg.name.as_str(), |b| {
            b.iter(|| is_finite(&env, black_box(&g.gens), None, &mut Trace::default()).unwrap())
        });
    }
    group.finish();
}

fn algebra_basis(c: &mut Criterion) {
    let g = battery::monomial_gl35().parse().unwrap();
    let env = Env::new(g.ff.clone());
    let pt = find_admissible(&env, &g.gens, false, &Exclusions::new(), None).unwrap();
    let mut group = c.benchmark_group("basis_env_algebra");
    for mu in [1, 2, 3] {
        let (spec, rel) = specialized_over(&env, &g.gens, &pt, mu).unwrap();
        group.bench_function(format!("monomial-gl35/mu{mu}"), |b| b.iter(|| basis_env_algebra(black_box(&spec), &rel)));
    }
    group.finish();
}

fn orders(c: &mut Criterion) {
    let g = battery::decision_battery().into_iter().find(|g| g.name == "signed-permutations-6").unwrap().group();
    let env = Env::new(g.ff.clone());
    let pt = find_admissible(&env, &g.gens, false, &Exclusions::new(), None).unwrap();
    let spec: Vec<_> = g.gens.iter().map(|s| specialize(&g.ff, s, &pt).unwrap()).collect();
    let mut group = c.benchmark_group("group_order_ff");
    for engine in [Engine::StabilizerChain, Engine::Dimino] {
        group.bench_function(format!("signed-permutations-6/{engine:?}"), |b| {
            b.iter(|| group_order_ff(black_box(&spec), 6, pt.field(), engine, 1 << 20).unwrap())
        });
    }
    group.finish();

    let g = battery::monomial_gl35().parse().unwrap();
    c.bench_function("size_finite/monomial-gl35", |b| {
        b.iter(|| order_report(black_box(&g), &OrderOptions::default()).unwrap())
    });
    c.bench_function("closure_oracle/monomial-gl35", |b| {
        b.iter(|| closure_oracle(&g.ff, black_box(&g.gens), 100_000))
    });
}

criterion_group!(benches, decision, algebra_basis, orders);
criterion_main!(benches);
