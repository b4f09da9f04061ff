//! Property tests over random edge lists: construction round-trips,
//! contraction identities, and subpath coverage.

use proptest::prelude::*;
use tk5_core::graph::{build_graph, contract_subgraph, CycleSeq, Graph};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        proptest::collection::vec(proptest::bool::ANY, pairs.len()).prop_map(move |mask| {
            let edges: Vec<_> = pairs
                .iter()
                .zip(&mask)
                .filter(|(_, &m)| m)
                .map(|(&e, _)| e)
                .collect();
            build_graph(n, &edges).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn build_then_enumerate_round_trips(g in arb_graph(9)) {
        let edges = g.edges();
        let rebuilt = build_graph(g.n(), &edges).unwrap();
        prop_assert_eq!(rebuilt.edges(), edges);
    }

    #[test]
    fn duplicate_edges_collapse(g in arb_graph(8)) {
        let mut doubled = g.edges();
        doubled.extend(g.edges().into_iter().map(|(u, v)| (v, u)));
        let rebuilt = build_graph(g.n(), &doubled).unwrap();
        prop_assert_eq!(rebuilt.edges(), g.edges());
    }

    #[test]
    fn singleton_contraction_preserves_structure(g in arb_graph(8), v_pick in 0usize..8) {
        let v = v_pick % g.n();
        let (h, map) = contract_subgraph(&g, &[v]).unwrap();
        prop_assert_eq!(h.n(), g.n());
        let mut mapped: Vec<_> = g
            .edges()
            .into_iter()
            .map(|(a, b)| (map[a].min(map[b]), map[a].max(map[b])))
            .collect();
        mapped.sort_unstable();
        prop_assert_eq!(mapped, h.edges());
    }

    #[test]
    fn contraction_reduces_count_by_set_size(g in arb_graph(8), a in 0usize..8, b in 0usize..8) {
        let (a, b) = (a % g.n(), b % g.n());
        if g.has_edge(a, b) {
            let (h, map) = contract_subgraph(&g, &[a, b]).unwrap();
            prop_assert_eq!(h.n(), g.n() - 1);
            prop_assert_eq!(map[a], map[b]);
        }
    }

    #[test]
    fn cycle_subpaths_partition(len in 3usize..9, i in 0usize..9, j in 0usize..9) {
        let g = Graph::cycle(len);
        let c = CycleSeq::new(&g, (0..len).collect()).unwrap();
        let (x, y) = (i % len, j % len);
        if x != y {
            let a = c.subpath(x, y).unwrap();
            let b = c.subpath(y, x).unwrap();
            let mut all: Vec<_> = a.vertices().iter().chain(b.vertices()).copied().collect();
            all.sort_unstable();
            all.dedup();
            prop_assert_eq!(all.len(), len);
            prop_assert_eq!(a.len() + b.len(), len + 2);
        }
    }

    #[test]
    fn separation_checkable_when_no_crossing_edges(g in arb_graph(8)) {
        // Split on a vertex cut found from any non-neighbor pair; if the
        // construction succeeds it must re-validate.
        let n = g.n();
        let comps = g.components();
        if comps.len() >= 2 {
            let side1 = comps[0].clone();
            let side2: Vec<_> = (0..n).filter(|v| !side1.contains(v)).collect();
            if !side1.is_empty() && !side2.is_empty() {
                // Disconnected graphs split with an empty cut.
                let sep = tk5_core::graph::Separation::new(&g, side1, side2);
                prop_assert!(sep.is_ok());
                prop_assert_eq!(sep.unwrap().order(), 0);
            }
        }
    }
}
