//! Menger-style connectivity: vertex connectivity via unit-capacity
//! vertex-split max-flow, (k,A)-connectivity, independent-path fans, and
//! rerouting a fan through prescribed terminals.

use crate::graph::{Graph, PathSeq, VertexId};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FanError {
    #[error("hub {0} lies in the terminal set")]
    HubInTerminals(VertexId),
    #[error("no fan of {want} independent paths to the prescribed terminals (max {got})")]
    NoPrescribedFan { want: usize, got: usize },
    #[error("no fan of {want} independent paths into the terminal set (max {got})")]
    NoFullFan { want: usize, got: usize },
    #[error("prescribed terminal {0} is not in the terminal set")]
    PrescribedNotInSet(VertexId),
    #[error("requested {k} prescribed terminals but n = {n}")]
    TooManyPrescribed { k: usize, n: usize },
}

/// A fan of independent paths from a hub into a terminal set: paths
/// pairwise share only the hub, and meet the terminal set only at their
/// endpoints.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PathFan {
    pub hub: VertexId,
    pub paths: Vec<PathSeq>,
    pub terminals: Vec<VertexId>,
}

impl PathFan {
    /// Checks the independence invariant verbatim against `g` and the
    /// terminal set `a`.
    pub fn verify(&self, g: &Graph, a: &[VertexId]) -> bool {
        let aset: std::collections::HashSet<_> = a.iter().copied().collect();
        let mut endpoints = std::collections::HashSet::new();
        let mut interior_seen = std::collections::HashSet::new();
        for p in &self.paths {
            if PathSeq::new(g, p.vertices().to_vec()).is_err() {
                return false;
            }
            if p.first() != self.hub {
                return false;
            }
            let end = p.last();
            if !aset.contains(&end) || !endpoints.insert(end) {
                return false;
            }
            for &v in &p.vertices()[1..p.len() - 1] {
                if aset.contains(&v) || v == self.hub {
                    return false;
                }
                if !interior_seen.insert(v) {
                    return false;
                }
            }
            if p.len() >= 2 && interior_seen.contains(&end) {
                return false;
            }
        }
        // Interior vertices may not reappear as endpoints either.
        endpoints.is_disjoint(&interior_seen)
            && self.terminals.iter().copied().collect::<std::collections::HashSet<_>>()
                == endpoints
    }
}

// ---------------------------------------------------------------------
// Unit-capacity max-flow over a vertex-split network.

const BIG: u32 = u32::MAX / 2;

struct Arc {
    to: usize,
    cap: u32,
    flow: u32,
    rev: usize,
    frozen: bool,
}

struct FlowNet {
    adj: Vec<Vec<usize>>,
    arcs: Vec<Arc>,
}

impl FlowNet {
    fn new(nodes: usize) -> FlowNet {
        FlowNet {
            adj: vec![Vec::new(); nodes],
            arcs: Vec::new(),
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: u32) -> usize {
        let a = self.arcs.len();
        self.arcs.push(Arc { to, cap, flow: 0, rev: a + 1, frozen: false });
        self.adj[from].push(a);
        self.arcs.push(Arc { to: from, cap: 0, flow: 0, rev: a, frozen: false });
        self.adj[to].push(a + 1);
        a
    }

    /// Residual capacity of an arc. A zero-capacity arc is the reverse
    /// half of a pair and carries the cancellable flow of its partner;
    /// freezing it pins the partner's flow.
    fn residual_cap(&self, ai: usize) -> u32 {
        let arc = &self.arcs[ai];
        if arc.cap == 0 {
            if arc.frozen {
                0
            } else {
                self.arcs[arc.rev].flow
            }
        } else {
            arc.cap - arc.flow
        }
    }

    /// One BFS augmentation of a unit of flow; arcs scanned in insertion
    /// order so the computation is deterministic.
    fn augment(&mut self, s: usize, t: usize) -> bool {
        let n = self.adj.len();
        let mut pred: Vec<Option<usize>> = vec![None; n];
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(s);
        let mut seen = vec![false; n];
        seen[s] = true;
        'bfs: while let Some(v) = queue.pop_front() {
            for &ai in &self.adj[v] {
                let arc = &self.arcs[ai];
                if self.residual_cap(ai) == 0 || seen[arc.to] {
                    continue;
                }
                seen[arc.to] = true;
                pred[arc.to] = Some(ai);
                if arc.to == t {
                    break 'bfs;
                }
                queue.push_back(arc.to);
            }
        }
        if pred[t].is_none() {
            return false;
        }
        let mut v = t;
        while v != s {
            let ai = pred[v].unwrap();
            let rev = self.arcs[ai].rev;
            if self.arcs[ai].cap > 0 {
                self.arcs[ai].flow += 1;
            } else {
                self.arcs[rev].flow -= 1;
            }
            v = self.arcs[rev].to;
        }
        true
    }

    fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut total = 0;
        while total < limit && self.augment(s, t) {
            total += 1;
        }
        total
    }

}

/// Network for independent paths from `hub` into `targets`, internally
/// disjoint from the target set. Node layout: 0 = source, 1 = sink,
/// 2+2v = v_in, 3+2v = v_out.
struct FanNet {
    net: FlowNet,
    n: usize,
    target_arc: Vec<Option<usize>>,
    hub: VertexId,
}

fn node_in(v: usize) -> usize {
    2 + 2 * v
}
fn node_out(v: usize) -> usize {
    3 + 2 * v
}

fn build_fan_net(
    g: &Graph,
    hub: VertexId,
    targets: &[(VertexId, u32)],
    blocked: &[VertexId],
) -> FanNet {
    let n = g.n();
    let mut is_blocked = vec![false; n];
    for &v in blocked {
        is_blocked[v] = true;
    }
    let mut target_cap = vec![None; n];
    for &(v, c) in targets {
        target_cap[v] = Some(c);
    }
    let mut net = FlowNet::new(2 + 2 * n);
    let mut target_arc = vec![None; n];
    net.add_arc(0, node_out(hub), BIG);
    for v in 0..n {
        if is_blocked[v] || v == hub {
            continue;
        }
        if let Some(c) = target_cap[v] {
            target_arc[v] = Some(net.add_arc(node_in(v), 1, c));
        } else {
            net.add_arc(node_in(v), node_out(v), 1);
        }
    }
    for (u, v) in g.edges() {
        if is_blocked[u] || is_blocked[v] {
            continue;
        }
        // Arcs leave out-nodes and enter in-nodes; targets have no
        // out-node traffic and the hub accepts no incoming arcs.
        if target_cap[u].is_none() && v != hub {
            net.add_arc(node_out(u), node_in(v), 1);
        }
        if target_cap[v].is_none() && u != hub {
            net.add_arc(node_out(v), node_in(u), 1);
        }
    }
    FanNet { net, n, target_arc, hub }
}

impl FanNet {
    fn max_flow(&mut self, limit: u32) -> u32 {
        self.net.max_flow(0, 1, limit)
    }

    /// Decomposes the current integral flow into vertex sequences from
    /// the hub to the saturated targets.
    fn decompose(&self) -> Vec<Vec<VertexId>> {
        // Successor of each out-node along a flow arc, consumed as used.
        let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (ai, arc) in self.net.arcs.iter().enumerate() {
            if arc.cap == 0 || arc.flow == 0 {
                continue;
            }
            let from = self.net.arcs[arc.rev].to;
            if from >= 2 && (from - 2) % 2 == 1 {
                let v = (from - 2) / 2;
                if arc.to >= 2 && (arc.to - 2) % 2 == 0 {
                    out_arcs[v].push(ai);
                }
            }
        }
        for list in &mut out_arcs {
            list.sort_unstable_by_key(|&ai| self.net.arcs[ai].to);
        }
        let hub_starts = out_arcs[self.hub].clone();
        let mut paths = Vec::new();
        let mut cursor = vec![0usize; self.n];
        for ai in hub_starts {
            let mut path = vec![self.hub];
            let mut v = (self.net.arcs[ai].to - 2) / 2;
            loop {
                path.push(v);
                if self.target_arc[v].is_some()
                    && self.net.arcs[self.target_arc[v].unwrap()].flow > 0
                {
                    // Endpoint reached; consume one unit of its arc.
                    break;
                }
                let next_ai = out_arcs[v][cursor[v]];
                cursor[v] += 1;
                v = (self.net.arcs[next_ai].to - 2) / 2;
            }
            paths.push(path);
        }
        paths
    }
}

// ---------------------------------------------------------------------
// Public operations.

/// Maximum number of internally disjoint paths between two distinct,
/// nonadjacent vertices (local vertex connectivity).
pub fn local_connectivity(g: &Graph, s: VertexId, t: VertexId) -> usize {
    let mut net = build_fan_net(g, s, &[(t, BIG)], &[]);
    net.max_flow(BIG) as usize
}

/// Vertex connectivity with the convention that complete graphs have
/// connectivity n-1. Minimum over nonadjacent pairs of the local
/// connectivity, computed by augmenting paths in lexicographic order.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    let mut best = n - 1;
    let mut any_pair = false;
    for s in 0..n {
        for t in (s + 1)..n {
            if g.has_edge(s, t) {
                continue;
            }
            any_pair = true;
            best = best.min(local_connectivity(g, s, t));
            if best == 0 {
                return 0;
            }
        }
    }
    if !any_pair {
        n - 1
    } else {
        best
    }
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            rec(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut r = 1usize;
    for i in 0..k {
        r = r.saturating_mul(n - i) / (i + 1);
    }
    r
}

/// True iff every cut of size less than `k` leaves a piece of `a` in
/// every component. Cuts up to size k-1 are enumerated directly when
/// that is affordable; otherwise a flow filter narrows the candidates
/// before a targeted enumeration confirms.
pub fn is_k_a_connected(g: &Graph, k: usize, a: &[VertexId]) -> bool {
    let n = g.n();
    if k == 0 {
        return true;
    }
    let enumerate_all = n <= 16 || binom(n, k - 1) <= 200_000;
    if enumerate_all {
        return exhaustive_k_a(g, k, a);
    }
    // Flow filter: any violating cut strands some vertex outside `a`
    // behind fewer than k internally disjoint paths into `a`.
    let in_a: std::collections::HashSet<_> = a.iter().copied().collect();
    let targets: Vec<_> = a.iter().map(|&v| (v, 1)).collect();
    for v in 0..n {
        if in_a.contains(&v) {
            continue;
        }
        let mut net = build_fan_net(g, v, &targets, &[]);
        if (net.max_flow(k as u32) as usize) < k {
            // A small separator exists; confirm it is a genuine cut.
            return exhaustive_k_a(g, k, a);
        }
    }
    true
}

fn exhaustive_k_a(g: &Graph, k: usize, a: &[VertexId]) -> bool {
    let n = g.n();
    let in_a = {
        let mut m = vec![false; n];
        for &v in a {
            m[v] = true;
        }
        m
    };
    for t in 0..k.min(n + 1) {
        for cut in subsets_of_size(n, t) {
            let mut mask = vec![true; n];
            for &v in &cut {
                mask[v] = false;
            }
            let comps = g.components_masked(&mask);
            if comps.len() < 2 {
                continue; // not a cut
            }
            for comp in &comps {
                if !comp.iter().any(|&v| in_a[v]) {
                    return false;
                }
            }
        }
    }
    true
}

/// A fan of `want` independent paths from `u` to distinct vertices of
/// `a`, each internally disjoint from `a`; `None` iff no such fan
/// exists.
pub fn independent_fan(
    g: &Graph,
    u: VertexId,
    a: &[VertexId],
    want: usize,
) -> Result<Option<PathFan>, FanError> {
    if a.contains(&u) {
        return Err(FanError::HubInTerminals(u));
    }
    if want == 0 {
        return Ok(Some(PathFan { hub: u, paths: vec![], terminals: vec![] }));
    }
    let targets: Vec<_> = a.iter().map(|&v| (v, 1)).collect();
    let mut net = build_fan_net(g, u, &targets, &[]);
    let got = net.max_flow(want as u32) as usize;
    if got < want {
        return Ok(None);
    }
    Ok(Some(fan_from_net(g, u, &net)))
}

fn fan_from_net(g: &Graph, u: VertexId, net: &FanNet) -> PathFan {
    let mut paths: Vec<PathSeq> = net
        .decompose()
        .into_iter()
        .map(|vs| PathSeq::new(g, vs).expect("flow decomposition yields valid paths"))
        .collect();
    paths.sort_by_key(|p| p.last());
    let terminals = paths.iter().map(|p| p.last()).collect();
    PathFan { hub: u, paths, terminals }
}

/// Reroutes a fan so that the first `prescribed.len()` paths end at the
/// prescribed terminals, realizing the rerouting by flow augmentation
/// from the prescribed sub-fan with its terminal arcs pinned.
pub fn perfect_reroute(
    g: &Graph,
    u: VertexId,
    a: &[VertexId],
    prescribed: &[VertexId],
    want: usize,
) -> Result<PathFan, FanError> {
    if a.contains(&u) {
        return Err(FanError::HubInTerminals(u));
    }
    let k = prescribed.len();
    if k > want {
        return Err(FanError::TooManyPrescribed { k, n: want });
    }
    for &p in prescribed {
        if !a.contains(&p) {
            return Err(FanError::PrescribedNotInSet(p));
        }
    }
    // Hypothesis (1): a fan onto exactly the prescribed terminals,
    // otherwise disjoint from the whole terminal set.
    let blocked: Vec<_> = a.iter().copied().filter(|v| !prescribed.contains(v)).collect();
    let pres_targets: Vec<_> = prescribed.iter().map(|&v| (v, 1)).collect();
    let mut pres_net = build_fan_net(g, u, &pres_targets, &blocked);
    let pres_got = pres_net.max_flow(k as u32) as usize;
    if pres_got < k {
        return Err(FanError::NoPrescribedFan { want: k, got: pres_got });
    }
    let prescribed_paths = pres_net.decompose();

    // Hypothesis (2): an unconstrained fan of the requested size.
    let targets: Vec<_> = a.iter().map(|&v| (v, 1)).collect();
    {
        let mut probe = build_fan_net(g, u, &targets, &[]);
        let got = probe.max_flow(want as u32) as usize;
        if got < want {
            return Err(FanError::NoFullFan { want, got });
        }
    }

    // Seed the full network with the prescribed fan, freeze its terminal
    // arcs, and augment. The rerouting lemma guarantees the frozen
    // terminals never block reaching the full fan size.
    let mut net = build_fan_net(g, u, &targets, &[]);
    seed_flow(&mut net, &prescribed_paths);
    for &p in prescribed {
        if let Some(ai) = net.target_arc[p] {
            let rev = net.net.arcs[ai].rev;
            net.net.arcs[rev].frozen = true;
        }
    }
    let extra = net.max_flow((want - k) as u32) as usize;
    assert_eq!(
        extra,
        want - k,
        "pinned augmentation must reach the full fan when both hypothesis fans exist"
    );
    let fan = fan_from_net(g, u, &net);
    // Reorder: path i ends at prescribed[i] for i < k.
    let mut paths = fan.paths;
    let mut ordered = Vec::with_capacity(want);
    for &p in prescribed {
        let idx = paths
            .iter()
            .position(|q| q.last() == p)
            .expect("frozen terminal stays an endpoint");
        ordered.push(paths.remove(idx));
    }
    ordered.extend(paths);
    let terminals = ordered.iter().map(|p| p.last()).collect();
    Ok(PathFan { hub: u, paths: ordered, terminals })
}

fn seed_flow(net: &mut FanNet, paths: &[Vec<VertexId>]) {
    for path in paths {
        debug_assert!(path.len() >= 2);
        // Source arc into the hub's out-node.
        let hub_arc = net.net.adj[0]
            .iter()
            .copied()
            .find(|&ai| net.net.arcs[ai].cap > 0)
            .expect("source arc exists");
        net.net.arcs[hub_arc].flow += 1;
        for w in path.windows(2) {
            let (x, y) = (w[0], w[1]);
            let from = node_out(x);
            let ai = net.net.adj[from]
                .iter()
                .copied()
                .find(|&ai| net.net.arcs[ai].to == node_in(y) && net.net.arcs[ai].cap > 0)
                .expect("edge arc exists in network");
            net.net.arcs[ai].flow += 1;
            let y_is_last = y == *path.last().unwrap();
            if y_is_last {
                let tai = net.target_arc[y].expect("terminal arc exists");
                net.net.arcs[tai].flow += 1;
            } else {
                let split = net.net.adj[node_in(y)]
                    .iter()
                    .copied()
                    .find(|&ai| net.net.arcs[ai].to == node_out(y) && net.net.arcs[ai].cap > 0)
                    .expect("split arc exists");
                net.net.arcs[split].flow += 1;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    fn petersen() -> Graph {
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, 5 + (i + 2) % 5));
        }
        build_graph(10, &edges).unwrap()
    }

    fn brute_connectivity(g: &Graph) -> usize {
        let n = g.n();
        if n <= 1 {
            return 0;
        }
        for t in 0..n.saturating_sub(1) {
            for cut in subsets_of_size(n, t) {
                let mut mask = vec![true; n];
                for &v in &cut {
                    mask[v] = false;
                }
                if g.components_masked(&mask).len() >= 2 {
                    return t;
                }
            }
        }
        n - 1
    }

    #[test]
    fn connectivity_small_cases() {
        assert_eq!(vertex_connectivity(&Graph::complete(6)), 5);
        assert_eq!(vertex_connectivity(&Graph::cycle(5)), 2);
        assert_eq!(vertex_connectivity(&petersen()), 3);
        assert_eq!(vertex_connectivity(&build_graph(2, &[]).unwrap()), 0);
        assert_eq!(vertex_connectivity(&build_graph(2, &[(0, 1)]).unwrap()), 1);
    }

    #[test]
    fn connectivity_agrees_with_brute_force() {
        // Deterministic family: all graphs on 5 vertices with edge sets
        // drawn from a fixed pseudo-random sweep, plus all on 4 vertices.
        let all4: Vec<(usize, usize)> =
            (0..4).flat_map(|u| ((u + 1)..4).map(move |v| (u, v))).collect();
        for bits in 0u32..(1 << all4.len()) {
            let edges: Vec<_> = all4
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = build_graph(4, &edges).unwrap();
            assert_eq!(vertex_connectivity(&g), brute_connectivity(&g), "{g:?}");
        }
        let mut state = 0x2545f4914f6cdd1du64;
        for n in [5usize, 6, 7] {
            let pairs: Vec<(usize, usize)> =
                (0..n).flat_map(|u| ((u + 1)..n).map(move |v| (u, v))).collect();
            for _ in 0..300 {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                let bits = state;
                let edges: Vec<_> = pairs
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| bits >> i & 1 == 1)
                    .map(|(_, &e)| e)
                    .collect();
                let g = build_graph(n, &edges).unwrap();
                assert_eq!(vertex_connectivity(&g), brute_connectivity(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn k_a_connectivity_examples() {
        let k5 = Graph::complete(5);
        assert!(is_k_a_connected(&k5, 4, &[0, 1]));

        let star = build_graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(!is_k_a_connected(&star, 2, &[0]));

        let p3 = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(is_k_a_connected(&p3, 2, &[0, 2]));

        // P4 with ends designated: the cut {1,3} strands vertex 2.
        let p4 = build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(is_k_a_connected(&p4, 2, &[0, 3]));
        assert!(!is_k_a_connected(&p4, 3, &[0, 3]));
    }

    #[test]
    fn fan_on_k4_and_c5() {
        let k4 = Graph::complete(4);
        let fan = independent_fan(&k4, 0, &[1, 2, 3], 3).unwrap().unwrap();
        assert!(fan.verify(&k4, &[1, 2, 3]));
        assert!(fan.paths.iter().all(|p| p.len() == 2));

        let c5 = Graph::cycle(5);
        let fan = independent_fan(&c5, 0, &[2, 3], 2).unwrap().unwrap();
        assert!(fan.verify(&c5, &[2, 3]));

        let star6 = build_graph(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert!(independent_fan(&star6, 0, &[1, 2, 3, 4, 5], 6)
            .unwrap()
            .is_none());
    }

    #[test]
    fn fan_internally_avoids_terminals() {
        // Path 0-1-2-3: fan from 0 into {1,3} of size 1 must stop at 1;
        // a 2-fan would need a path through 1, which is forbidden.
        let p4 = build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(independent_fan(&p4, 0, &[1, 3], 2).unwrap().is_none());
        let fan = independent_fan(&p4, 0, &[1, 3], 1).unwrap().unwrap();
        assert!(fan.verify(&p4, &[1, 3]));
    }

    #[test]
    fn reroute_k5() {
        let k5 = Graph::complete(5);
        let fan = perfect_reroute(&k5, 0, &[1, 2, 3, 4], &[3], 4).unwrap();
        assert_eq!(fan.paths[0].last(), 3);
        assert!(fan.verify(&k5, &[1, 2, 3, 4]));
    }

    #[test]
    fn reroute_star() {
        let star = build_graph(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        let fan = perfect_reroute(&star, 0, &[1, 2, 3, 4, 5], &[5, 2], 3).unwrap();
        assert_eq!(fan.paths[0].last(), 5);
        assert_eq!(fan.paths[1].last(), 2);
        assert!(fan.verify(&star, &[1, 2, 3, 4, 5]));
    }

    #[test]
    fn reroute_reports_which_hypothesis_failed() {
        // C5: only 2 independent paths from 0 into {2,3}; asking for 3
        // fails the full-fan hypothesis.
        let c5 = Graph::cycle(5);
        match perfect_reroute(&c5, 0, &[2, 3], &[2], 3) {
            Err(FanError::NoFullFan { want: 3, got: 2 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        // Path graph: no fan to terminal 3 avoiding terminal 1.
        let p4 = build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        match perfect_reroute(&p4, 0, &[1, 3], &[3], 1) {
            Err(FanError::NoPrescribedFan { want: 1, got: 0 }) => {}
            other => panic!("unexpected: {other:?}"),
        }
    }

    #[test]
    fn reroute_petersen_neighbors() {
        let g = petersen();
        // Terminals: the three neighbors of 0 plus two far vertices.
        let a = vec![1, 4, 5, 7, 8];
        let fan = perfect_reroute(&g, 0, &a, &[5], 3).unwrap();
        assert_eq!(fan.paths[0].last(), 5);
        assert!(fan.verify(&g, &a));
    }
}
