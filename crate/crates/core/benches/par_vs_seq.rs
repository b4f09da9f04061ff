//! Parallel vs. sequential candidate fan-out on the exhaustive search
//! cores. With `--no-default-features` the parallel mode degrades to
//! sequential and the two curves coincide.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tk5_core::exec::{Deadline, ExecMode};
use tk5_core::graph::{build_graph, Graph};
use tk5_core::subdivision::{find_tk5, SearchOutcome, TK5Constraints};

fn k_n_minus_matching(n: usize, drop: usize) -> Graph {
    let mut skip = std::collections::HashSet::new();
    for i in 0..drop {
        skip.insert((2 * i, 2 * i + 1));
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !skip.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    build_graph(n, &edges).unwrap()
}

/// Dense nonplanar hosts where the branch-set scan is the hot loop.
fn tk5_search_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_tk5");
    for &(n, drop) in &[(9usize, 3usize), (10, 4), (11, 5)] {
        let g = k_n_minus_matching(n, drop);
        for mode in [ExecMode::Sequential, ExecMode::Parallel] {
            let name = match mode {
                ExecMode::Sequential => "seq",
                ExecMode::Parallel => "par",
            };
            group.bench_with_input(
                BenchmarkId::new(name, format!("K{n}-M{drop}")),
                &g,
                |b, g| {
                    b.iter(|| {
                        let out =
                            find_tk5(g, &TK5Constraints::none(), Deadline::none(), mode);
                        assert!(matches!(out, SearchOutcome::Found(_)));
                    })
                },
            );
        }
    }
    group.finish();
}

/// A planar grid forces the full sweep to prove absence, the worst case
/// for both modes.
fn tk5_absence_bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("find_tk5_absent");
    let g = {
        let mut edges = Vec::new();
        for r in 0..4 {
            for col in 0..4 {
                let v = 4 * r + col;
                if col + 1 < 4 {
                    edges.push((v, v + 1));
                }
                if r + 1 < 4 {
                    edges.push((v, v + 4));
                }
                if r + 1 < 4 && col + 1 < 4 {
                    edges.push((v, v + 5));
                }
            }
        }
        build_graph(16, &edges).unwrap()
    };
    for mode in [ExecMode::Sequential, ExecMode::Parallel] {
        let name = match mode {
            ExecMode::Sequential => "seq",
            ExecMode::Parallel => "par",
        };
        group.bench_with_input(BenchmarkId::new(name, "grid4x4"), &g, |b, g| {
            b.iter(|| {
                let out = find_tk5(g, &TK5Constraints::none(), Deadline::none(), mode);
                assert_eq!(out, SearchOutcome::Absent);
            })
        });
    }
    group.finish();
}

criterion_group!(benches, tk5_search_bench, tk5_absence_bench);
criterion_main!(benches);
