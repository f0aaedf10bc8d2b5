use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use nulldecomp::campaign::{check_graphs, run_campaign, CampaignSpec, Execution};
use nulldecomp::checks::CheckConfig;
use nulldecomp::generate::generate;
use nulldecomp::graph::Graph;

fn bench_campaign(c: &mut Criterion) {
    let mut group = c.benchmark_group("campaign");
    group.sample_size(10);
    for count in [64, 256] {
        let spec = CampaignSpec::new(count, 5, 12, 7);
        for (name, exec) in [
            ("sequential", Execution::Sequential),
            ("parallel", Execution::Parallel),
        ] {
            group.bench_with_input(BenchmarkId::new(name, count), &spec, |b, spec| {
                b.iter(|| run_campaign(spec, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_large_graphs(c: &mut Criterion) {
    // oracle checks are skipped above their budgets, so this measures the
    // exact linear algebra on bigger graphs
    let spec = CampaignSpec::new(32, 30, 40, 11);
    let graphs: Vec<Graph> = (0..spec.count)
        .map(|i| generate(&spec.graph_spec(i)).unwrap())
        .collect();
    let cfg = CheckConfig::default();
    let mut group = c.benchmark_group("checks_n30_40");
    group.sample_size(10);
    group.bench_function("sequential", |b| {
        b.iter(|| check_graphs(&graphs, &cfg, Execution::Sequential))
    });
    group.bench_function("parallel", |b| {
        b.iter(|| check_graphs(&graphs, &cfg, Execution::Parallel))
    });
    group.finish();
}

criterion_group!(benches, bench_campaign, bench_large_graphs);
criterion_main!(benches);
