use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use kgvim_core::{
    build_lambda, iterate_oracle, iterate_recurrence, run, IterationPath, MultiplierSpec, Poly,
    ProblemSpec,
};

/// Oracle step against recurrence step on the same profile (the sixth
/// iterate, degree 36).
fn bench_single_step(c: &mut Criterion) {
    let problem = ProblemSpec::airy();
    let multiplier = MultiplierSpec::partial_sum_2();
    let kernel = build_lambda(&multiplier);
    let trace = run(&problem, &multiplier, 6, None, IterationPath::Oracle).unwrap();
    let profile: &Poly = trace.profile(6);

    let mut group = c.benchmark_group("single_step");
    group.bench_function("oracle", |b| {
        b.iter(|| iterate_oracle(black_box(profile), &kernel, &problem, None))
    });
    group.bench_function("recurrence", |b| {
        b.iter(|| iterate_recurrence(black_box(profile.coeffs())).unwrap())
    });
    group.finish();
}

fn bench_full_trace(c: &mut Criterion) {
    let problem = ProblemSpec::airy();
    let multiplier = MultiplierSpec::partial_sum_2();
    let mut group = c.benchmark_group("trace_10_iterations");
    for path in [
        IterationPath::Oracle,
        IterationPath::Recurrence,
        IterationPath::Both,
    ] {
        let name = match path {
            IterationPath::Oracle => "oracle",
            IterationPath::Recurrence => "recurrence",
            IterationPath::Both => "both",
        };
        group.bench_function(name, |b| {
            b.iter(|| run(&problem, &multiplier, black_box(10), None, path).unwrap())
        });
    }
    group.finish();
}

fn bench_kernel_construction(c: &mut Criterion) {
    let mut group = c.benchmark_group("build_lambda");
    for order in [6usize, 12, 24] {
        let spec = MultiplierSpec::series(order).unwrap();
        group.bench_with_input(BenchmarkId::new("series", order), &spec, |b, spec| {
            b.iter(|| build_lambda(black_box(spec)))
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_single_step,
    bench_full_trace,
    bench_kernel_construction
);
criterion_main!(benches);
