//! Cross-checks against independent brute-force oracles at small scale:
//! planarity vs. exhaustive rotation-system enumeration, independent
//! fans vs. exhaustive path-set enumeration, and linkage monotonicity
//! under edge addition.

use tk5_core::connectivity::independent_fan;
use tk5_core::exec::Deadline;
use tk5_core::graph::{build_graph, Graph, VertexId};
use tk5_core::linkage::{two_disjoint_paths, TwoPathsOutcome};
use tk5_core::planarity::{faces_of_rotation, is_planar, Rotation};

/// Genus-0 test by enumerating every rotation system and checking the
/// Euler count over facial walks, component by component.
fn planar_by_rotation_enumeration(g: &Graph) -> bool {
    let n = g.n();
    let comps = g.components();
    let mut comp_of = vec![0usize; n];
    for (ci, comp) in comps.iter().enumerate() {
        for &v in comp {
            comp_of[v] = ci;
        }
    }
    let mut edge_count = vec![0i64; comps.len()];
    for (u, _) in g.edges() {
        edge_count[comp_of[u]] += 1;
    }
    // Rotation choices per vertex: permutations fixing the first
    // neighbor (rotations are cyclic orders).
    fn perms_fixing_first(list: &[VertexId]) -> Vec<Vec<VertexId>> {
        if list.len() <= 2 {
            return vec![list.to_vec()];
        }
        let first = list[0];
        let rest: Vec<VertexId> = list[1..].to_vec();
        let mut out = Vec::new();
        permute(&rest, &mut Vec::new(), &mut vec![false; rest.len()], &mut out);
        out.into_iter()
            .map(|tail| {
                let mut r = vec![first];
                r.extend(tail);
                r
            })
            .collect()
    }
    fn permute(
        items: &[VertexId],
        cur: &mut Vec<VertexId>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        if cur.len() == items.len() {
            out.push(cur.clone());
            return;
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                cur.push(items[i]);
                permute(items, cur, used, out);
                cur.pop();
                used[i] = false;
            }
        }
    }
    let choices: Vec<Vec<Vec<VertexId>>> =
        (0..n).map(|v| perms_fixing_first(g.neighbors(v))).collect();
    fn rec(
        v: usize,
        choices: &[Vec<Vec<VertexId>>],
        rot: &mut Rotation,
        comps: &[Vec<VertexId>],
        comp_of: &[usize],
        edge_count: &[i64],
    ) -> bool {
        if v == choices.len() {
            let faces = faces_of_rotation(rot);
            let mut fc = vec![0i64; comps.len()];
            for f in &faces {
                fc[comp_of[f[0]]] += 1;
            }
            return comps.iter().enumerate().all(|(ci, comp)| {
                let vv = comp.len() as i64;
                let f = if comp.len() == 1 && edge_count[ci] == 0 {
                    1
                } else {
                    fc[ci]
                };
                vv - edge_count[ci] + f == 2
            });
        }
        for choice in &choices[v] {
            rot[v] = choice.clone();
            if rec(v + 1, choices, rot, comps, comp_of, edge_count) {
                return true;
            }
        }
        false
    }
    let mut rot: Rotation = vec![Vec::new(); n];
    rec(0, &choices, &mut rot, &comps, &comp_of, &edge_count)
}

#[test]
fn planarity_matches_rotation_enumeration_up_to_five_vertices() {
    let all_pairs: Vec<(usize, usize)> = (0..5)
        .flat_map(|u| ((u + 1)..5).map(move |v| (u, v)))
        .collect();
    for bits in 0u32..(1 << all_pairs.len()) {
        let edges: Vec<_> = all_pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = build_graph(5, &edges).unwrap();
        assert_eq!(
            is_planar(&g),
            planar_by_rotation_enumeration(&g),
            "disagreement on {g:?}"
        );
    }
}

#[test]
fn planarity_matches_rotation_enumeration_on_sparse_six_vertex_graphs() {
    // Keep the rotation space small by bounding degrees.
    let mut state = 0x853c49e6748fea9bu64;
    let all_pairs: Vec<(usize, usize)> = (0..6)
        .flat_map(|u| ((u + 1)..6).map(move |v| (u, v)))
        .collect();
    let mut done = 0;
    while done < 150 {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let bits = state as u32 & ((1 << 15) - 1);
        if (bits.count_ones() as usize) > 9 {
            continue;
        }
        let edges: Vec<_> = all_pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = build_graph(6, &edges).unwrap();
        if (0..6).any(|v| g.degree(v) > 4) {
            continue;
        }
        assert_eq!(
            is_planar(&g),
            planar_by_rotation_enumeration(&g),
            "disagreement on {g:?}"
        );
        done += 1;
    }
}

/// Brute-force independent-fan existence: choose `want` distinct
/// terminals and try to realize pairwise internally disjoint paths by
/// plain enumeration.
fn brute_fan_exists(g: &Graph, u: VertexId, a: &[VertexId], want: usize) -> bool {
    fn terminals_rec(
        g: &Graph,
        u: VertexId,
        a: &[VertexId],
        picked: &mut Vec<VertexId>,
        from: usize,
        want: usize,
    ) -> bool {
        if picked.len() == want {
            let mut used = vec![false; g.n()];
            used[u] = true;
            return paths_rec(g, u, a, picked, 0, &mut used);
        }
        for i in from..a.len() {
            picked.push(a[i]);
            if terminals_rec(g, u, a, picked, i + 1, want) {
                picked.pop();
                return true;
            }
            picked.pop();
        }
        false
    }
    fn paths_rec(
        g: &Graph,
        u: VertexId,
        a: &[VertexId],
        terminals: &Vec<VertexId>,
        idx: usize,
        used: &mut Vec<bool>,
    ) -> bool {
        if idx == terminals.len() {
            return true;
        }
        let target = terminals[idx];
        // Grow one path from u to target through free non-terminal
        // vertices.
        #[allow(clippy::too_many_arguments)]
        fn grow(
            g: &Graph,
            a: &[VertexId],
            terminals: &Vec<VertexId>,
            idx: usize,
            head: VertexId,
            target: VertexId,
            used: &mut Vec<bool>,
            u: VertexId,
        ) -> bool {
            for &w in g.neighbors(head) {
                if w == target {
                    used[w] = true;
                    if paths_rec(g, u, a, terminals, idx + 1, used) {
                        used[w] = false;
                        return true;
                    }
                    used[w] = false;
                    continue;
                }
                if used[w] || a.contains(&w) {
                    continue;
                }
                used[w] = true;
                if grow(g, a, terminals, idx, w, target, used, u) {
                    used[w] = false;
                    return true;
                }
                used[w] = false;
            }
            false
        }
        grow(g, a, terminals, idx, u, target, used, u)
    }
    let mut picked = Vec::new();
    terminals_rec(g, u, a, &mut picked, 0, want)
}

#[test]
fn fan_agrees_with_brute_force_enumeration() {
    let mut state = 0xc0ffee123456789u64;
    let mut done = 0;
    while done < 400 {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let n = 5 + (state % 3) as usize; // 5..=7
        let all_pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let bits = (state >> 8) as u32;
        let edges: Vec<_> = all_pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> (i % 21) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = build_graph(n, &edges).unwrap();
        let u = (state >> 40) as usize % n;
        let mut a: Vec<usize> = (0..n).filter(|&v| v != u).collect();
        a.truncate(4.min(a.len()));
        for want in 1..=a.len() {
            let got = independent_fan(&g, u, &a, want).unwrap();
            let expect = brute_fan_exists(&g, u, &a, want);
            assert_eq!(got.is_some(), expect, "{g:?} u={u} a={a:?} want={want}");
            if let Some(fan) = got {
                assert!(fan.verify(&g, &a));
            }
        }
        done += 1;
    }
}

#[test]
fn linkage_monotone_under_edge_addition() {
    // Once the path branch holds, adding any edge keeps it.
    let mut state = 0x1234_5678_9abc_def0u64;
    let mut done = 0;
    while done < 100 {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        let n = 5 + (state % 2) as usize;
        let all_pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
            .collect();
        let bits = (state >> 10) as u32;
        let edges: Vec<_> = all_pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| bits >> (i % 15) & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        let g = build_graph(n, &edges).unwrap();
        let found = matches!(
            two_disjoint_paths(&g, 0, 1, 2, 3, Deadline::none()),
            Ok(TwoPathsOutcome::Paths(_, _))
        );
        if !found {
            continue;
        }
        for &(u, v) in &all_pairs {
            if g.has_edge(u, v) {
                continue;
            }
            let bigger = g.with_extra_edges(&[(u, v)]).unwrap();
            assert!(
                matches!(
                    two_disjoint_paths(&bigger, 0, 1, 2, 3, Deadline::none()),
                    Ok(TwoPathsOutcome::Paths(_, _))
                ),
                "adding {u}-{v} flipped a linkage instance: {g:?}"
            );
        }
        done += 1;
    }
}
