//! Serial vs rayon evaluation of the semi-discrete right-hand side.

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use wbcu::evolution::{semidiscrete_rhs_1d, semidiscrete_rhs_2d};
use wbcu::{Execution, Problem, SolverConfig};

const EXECS: [(&str, Execution); 2] = [("serial", Execution::Serial), ("parallel", Execution::Parallel)];

fn rhs_1d(c: &mut Criterion) {
    let Problem::OneD(p) = Problem::by_name("isothermal-linear", None).unwrap() else { unreachable!() };
    let mut group = c.benchmark_group("rhs_1d");
    for (label, exec) in EXECS {
        let case = p.setup(2000, SolverConfig::default().with_exec(exec)).unwrap();
        group.bench_with_input(BenchmarkId::new(label, 2000), &case, |b, case| {
            b.iter(|| semidiscrete_rhs_1d(black_box(&case.initial), &case.solver).unwrap())
        });
    }
    group.finish();
}

fn rhs_2d(c: &mut Criterion) {
    let Problem::TwoD(p) = Problem::by_name("isothermal-2d", None).unwrap() else { unreachable!() };
    let mut group = c.benchmark_group("rhs_2d");
    group.sample_size(20);
    for n in [100, 400] {
        for (label, exec) in EXECS {
            let case = p.setup(n, n, SolverConfig::default().with_exec(exec)).unwrap();
            group.bench_with_input(BenchmarkId::new(label, format!("{n}x{n}")), &case, |b, case| {
                b.iter(|| semidiscrete_rhs_2d(black_box(&case.initial), &case.solver).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, rhs_1d, rhs_2d);
criterion_main!(benches);
