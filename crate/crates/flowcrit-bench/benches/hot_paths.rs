use criterion::{criterion_group, criterion_main, Criterion};
use flowcrit::{BorderedGraph, Group, Multigraph};

fn petersen() -> Multigraph {
    let mut pairs = Vec::new();
    for i in 0..5 {
        pairs.push((i, (i + 1) % 5));
        pairs.push((i, i + 5));
        pairs.push((i + 5, (i + 2) % 5 + 5));
    }
    Multigraph::from_edge_list(10, &pairs).unwrap()
}

fn bench_flow_search(c: &mut Criterion) {
    let p = petersen();
    let z5 = Group::cyclic(5).unwrap();
    c.bench_function("count_nz_flows petersen z5", |b| {
        b.iter(|| {
            let bg = BorderedGraph::with_zero_boundary(p.clone(), z5.clone());
            flowcrit::count_nz_flows(&bg)
        })
    });
}

fn bench_canonical_form(c: &mut Criterion) {
    let p = petersen();
    c.bench_function("canonical_form petersen", |b| b.iter(|| p.canonical_form()));
}

fn bench_genus(c: &mut Criterion) {
    let p = petersen();
    c.bench_function("euler_genus petersen", |b| {
        b.iter(|| flowcrit::euler_genus(&p).unwrap().genus)
    });
    let k33 = {
        let mut pairs = Vec::new();
        for u in 0..3 {
            for v in 3..6 {
                pairs.push((u, v));
            }
        }
        Multigraph::from_edge_list(6, &pairs).unwrap()
    };
    c.bench_function("euler_genus k33", |b| {
        b.iter(|| flowcrit::euler_genus(&k33).unwrap().genus)
    });
}

fn bench_criticality(c: &mut Criterion) {
    let g = flowcrit::k3n_plus(8).unwrap();
    let z3 = Group::cyclic(3).unwrap();
    c.bench_function("is_flow_critical k3n_plus(8) fast", |b| {
        b.iter(|| {
            let bg = BorderedGraph::with_zero_boundary(g.clone(), z3.clone());
            flowcrit::is_flow_critical(&bg, flowcrit::CriticalityMode::Fast).unwrap()
        })
    });
}

fn bench_catalog(c: &mut Criterion) {
    // first call builds the closure; later iterations measure the cache
    c.bench_function("dual_4ore_catalog(8) cached", |b| {
        b.iter(|| flowcrit::dual_4ore_catalog(8).unwrap().len())
    });
}

criterion_group!(
    benches,
    bench_flow_search,
    bench_canonical_form,
    bench_genus,
    bench_criticality,
    bench_catalog
);
criterion_main!(benches);
