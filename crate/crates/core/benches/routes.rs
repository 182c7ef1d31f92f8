use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rayon::ThreadPoolBuilder;

use schubert_core::classes::{push_composition, Route, Theory};
use schubert_core::combinat::Composition;

fn two_one(k: usize) -> Composition {
    let mut parts = vec![0; k];
    parts[0] = 2;
    parts[1] = 1;
    Composition::new(parts)
}

fn routes(c: &mut Criterion) {
    let single = ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let mut group = c.benchmark_group("pushforward");
    group.sample_size(10);
    for theory in [Theory::Cohomology, Theory::KTheory] {
        for k in 2..=4 {
            let n_cap = 2;
            let mu = two_one(k);
            for route in Route::ALL {
                let id = format!("{theory}/k={k}/{route}");
                group.bench_function(BenchmarkId::new("pool=default", &id), |b| {
                    b.iter(|| push_composition(&mu, k, n_cap, theory, route).unwrap())
                });
                group.bench_function(BenchmarkId::new("pool=1", &id), |b| {
                    b.iter(|| single.install(|| push_composition(&mu, k, n_cap, theory, route).unwrap()))
                });
            }
        }
    }
    group.finish();
}

criterion_group!(benches, routes);
criterion_main!(benches);
