use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use subproj_core::Ring;
use subproj_harness::{run_suite, Execution, TrialConfig};

fn execution(c: &mut Criterion) {
    for (suite, ring) in [("thm-4-1", Ring::IntegersMod(4)), ("lem-nul1", Ring::Integers)] {
        let mut group = c.benchmark_group(suite);
        group.sample_size(10);
        for (label, mode) in [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)] {
            let cfg = TrialConfig::new(ring, 64, 7).with_execution(mode);
            group.bench_with_input(BenchmarkId::from_parameter(label), &cfg, |b, cfg| {
                b.iter(|| run_suite(suite, cfg).expect("suite runs"))
            });
        }
        group.finish();
    }
}

criterion_group!(benches, execution);
criterion_main!(benches);
