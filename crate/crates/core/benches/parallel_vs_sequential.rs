use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rigidcount::henneberg::random_laman;
use rigidcount::par::with_jobs;
use rigidcount::{Engine, EngineConfig, MarkedGraph};

fn load(name: &str) -> MarkedGraph {
    let path = format!("{}/../../data/graphs/{name}.txt", env!("CARGO_MANIFEST_DIR"));
    MarkedGraph::parse(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn inputs() -> Vec<(String, MarkedGraph)> {
    let mut out = vec![("U".to_string(), load("U")), ("V".to_string(), load("V"))];
    out.extend((0..3).map(|s| (format!("laman7-{s}"), random_laman(7, s))));
    out
}

/// Fresh engine without memoization so every iteration redoes the full recursion.
fn count_all(graphs: &[(String, MarkedGraph)]) -> Vec<String> {
    let engine = Engine::new(EngineConfig { memo: false, ..EngineConfig::default() });
    graphs.iter().map(|(_, g)| engine.get_nor(g).unwrap().count.to_string()).collect()
}

fn bench(c: &mut Criterion) {
    let graphs = inputs();
    let sequential = with_jobs(1, || count_all(&graphs));
    assert_eq!(sequential, count_all(&graphs));

    let mut group = c.benchmark_group("get_nor");
    group.sample_size(10);
    for (label, jobs) in [("sequential", 1), ("parallel", 0)] {
        group.bench_with_input(BenchmarkId::new(label, graphs.len()), &jobs, |b, &jobs| {
            b.iter(|| with_jobs(jobs, || count_all(&graphs)))
        });
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
