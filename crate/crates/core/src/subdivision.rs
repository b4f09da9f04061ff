//! K4-minus and TK5 certificates: subgraph scans, an exhaustive
//! branch-vertex/arc search with connectivity pruning, and the
//! constructor that assembles a TK5 from named path pieces.

use crate::exec::{first_min_by_candidate, Deadline, ExecMode};
use crate::graph::{Graph, PathSeq, VertexId};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CertError {
    #[error("wiring entry {0}: segment {1} does not chain onto the running path")]
    BrokenChain(usize, usize),
    #[error("wiring entry {0} does not join its branch pair")]
    WrongEndpoints(usize),
    #[error("arcs {0} and {1} share an internal vertex")]
    ArcsOverlap(usize, usize),
    #[error("arc {0} passes through a branch vertex")]
    ArcThroughBranch(usize),
    #[error("arc {0} is not a path in the graph: {1}")]
    ArcInvalid(usize, String),
    #[error("expected 10 wiring entries, got {0}")]
    WrongArity(usize),
    #[error("branch vertices are not distinct")]
    BranchNotDistinct,
    #[error("vertex {0} out of range")]
    OutOfRange(VertexId),
}

/// The unordered pairs over five branch indices, in lexicographic order.
pub const BRANCH_PAIRS: [(usize, usize); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

/// Four vertices spanning at least the five edges of K4 minus an edge.
/// `missing_pair` records the designated nonadjacent pair (for the
/// subgraph reading of a full K4 it is the lexicographically least
/// pair).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct K4MinusCertificate {
    pub vertices: [VertexId; 4],
    pub missing_pair: (VertexId, VertexId),
}

impl K4MinusCertificate {
    /// All five role edges are present; the missing pair is one of the
    /// six vertex pairs.
    pub fn verify(&self, g: &Graph) -> bool {
        let vs = &self.vertices;
        let mut set = std::collections::HashSet::new();
        for &v in vs {
            if v >= g.n() || !set.insert(v) {
                return false;
            }
        }
        let (m1, m2) = self.missing_pair;
        if !vs.contains(&m1) || !vs.contains(&m2) || m1 == m2 {
            return false;
        }
        for i in 0..4 {
            for j in (i + 1)..4 {
                let (a, b) = (vs[i], vs[j]);
                let is_missing =
                    (a.min(b), a.max(b)) == (m1.min(m2), m1.max(m2));
                if !is_missing && !g.has_edge(a, b) {
                    return false;
                }
            }
        }
        true
    }

    /// The induced condition of the designated input shape: the missing
    /// pair really is a non-edge.
    pub fn missing_pair_absent(&self, g: &Graph) -> bool {
        !g.has_edge(self.missing_pair.0, self.missing_pair.1)
    }
}

/// Finds four vertices outside `avoid` spanning >= 5 edges, scanning
/// 4-subsets in lexicographic order.
pub fn find_k4_minus(g: &Graph, avoid: &[VertexId]) -> Option<K4MinusCertificate> {
    let banned: std::collections::HashSet<_> = avoid.iter().copied().collect();
    let verts: Vec<VertexId> = (0..g.n()).filter(|v| !banned.contains(v)).collect();
    let m = verts.len();
    for a in 0..m {
        for b in (a + 1)..m {
            for c in (b + 1)..m {
                for d in (c + 1)..m {
                    let q = [verts[a], verts[b], verts[c], verts[d]];
                    let mut missing = Vec::new();
                    for i in 0..4 {
                        for j in (i + 1)..4 {
                            if !g.has_edge(q[i], q[j]) {
                                missing.push((q[i], q[j]));
                            }
                        }
                    }
                    if missing.len() <= 1 {
                        let missing_pair = missing
                            .first()
                            .copied()
                            .unwrap_or((q[0].min(q[1]), q[0].max(q[1])));
                        let cert = K4MinusCertificate {
                            vertices: q,
                            missing_pair,
                        };
                        debug_assert!(cert.verify(g));
                        return Some(cert);
                    }
                }
            }
        }
    }
    None
}

/// Constraints on a TK5: vertices that may not serve as branch
/// vertices, and per-vertex whitelists of usable incident edges.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct TK5Constraints {
    pub forbidden_branch: Vec<VertexId>,
    pub allowed_incident_edges: Vec<(VertexId, Vec<VertexId>)>,
}

impl TK5Constraints {
    pub fn none() -> TK5Constraints {
        TK5Constraints::default()
    }

    pub fn forbid_branch(vs: &[VertexId]) -> TK5Constraints {
        TK5Constraints {
            forbidden_branch: vs.to_vec(),
            allowed_incident_edges: Vec::new(),
        }
    }

    pub fn restrict_vertex(v: VertexId, allowed: &[VertexId]) -> TK5Constraints {
        TK5Constraints {
            forbidden_branch: Vec::new(),
            allowed_incident_edges: vec![(v, allowed.to_vec())],
        }
    }

    /// The subgraph of `g` with non-permitted incident edges removed.
    pub fn effective_graph(&self, g: &Graph) -> Graph {
        if self.allowed_incident_edges.is_empty() {
            return g.clone();
        }
        let allow: std::collections::HashMap<VertexId, &Vec<VertexId>> = self
            .allowed_incident_edges
            .iter()
            .map(|(v, l)| (*v, l))
            .collect();
        let edges: Vec<_> = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| {
                let u_ok = allow.get(&u).is_none_or(|l| l.contains(&v));
                let v_ok = allow.get(&v).is_none_or(|l| l.contains(&u));
                u_ok && v_ok
            })
            .collect();
        Graph::build(g.n(), &edges).expect("edge filtering preserves validity")
    }
}

/// A K5 subdivision: five branch vertices and ten internally disjoint
/// arcs indexed by [`BRANCH_PAIRS`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TK5Certificate {
    pub branch: [VertexId; 5],
    pub arcs: Vec<PathSeq>,
}

impl TK5Certificate {
    pub fn uses_branch(&self, v: VertexId) -> bool {
        self.branch.contains(&v)
    }
}

/// True iff the certificate is a valid TK5 in `g` and honors the
/// constraints: no forbidden branch vertex, and every arc edge incident
/// to a restricted vertex goes to a permitted neighbor.
pub fn verify_tk5(g: &Graph, cert: &TK5Certificate, constraints: &TK5Constraints) -> bool {
    if cert.arcs.len() != 10 {
        return false;
    }
    let mut set = std::collections::HashSet::new();
    for &v in &cert.branch {
        if v >= g.n() || !set.insert(v) {
            return false;
        }
    }
    if cert
        .branch
        .iter()
        .any(|v| constraints.forbidden_branch.contains(v))
    {
        return false;
    }
    let allow: std::collections::HashMap<VertexId, &Vec<VertexId>> = constraints
        .allowed_incident_edges
        .iter()
        .map(|(v, l)| (*v, l))
        .collect();
    let mut interior_seen: std::collections::HashSet<VertexId> = std::collections::HashSet::new();
    for (k, arc) in cert.arcs.iter().enumerate() {
        if PathSeq::new(g, arc.vertices().to_vec()).is_err() || arc.len() < 2 {
            return false;
        }
        let (i, j) = BRANCH_PAIRS[k];
        if arc.first() != cert.branch[i] || arc.last() != cert.branch[j] {
            return false;
        }
        for &v in arc.interior() {
            if cert.branch.contains(&v) || !interior_seen.insert(v) {
                return false;
            }
        }
        for w in arc.vertices().windows(2) {
            let (u, v) = (w[0], w[1]);
            let u_ok = allow.get(&u).is_none_or(|l| l.contains(&v));
            let v_ok = allow.get(&v).is_none_or(|l| l.contains(&u));
            if !u_ok || !v_ok {
                return false;
            }
        }
    }
    true
}

/// Result of a bounded exhaustive search: timeout is distinct from
/// absence and never conflated with it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    Absent,
    Timeout,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

/// Exhaustive TK5 search: branch 5-subsets in lexicographic order
/// (filtered by effective degree >= 4), arcs grown shortest-first with
/// connectivity pruning. Distinct branch sets may be evaluated in
/// parallel; the certificate returned is always the lexicographically
/// least among successes.
pub fn find_tk5(
    g: &Graph,
    constraints: &TK5Constraints,
    deadline: Deadline,
    mode: ExecMode,
) -> SearchOutcome<TK5Certificate> {
    let eff = constraints.effective_graph(g);
    let n = eff.n();
    let forbidden: std::collections::HashSet<_> =
        constraints.forbidden_branch.iter().copied().collect();
    let good: Vec<VertexId> = (0..n)
        .filter(|&v| eff.degree(v) >= 4 && !forbidden.contains(&v))
        .collect();
    if good.len() < 5 {
        return SearchOutcome::Absent;
    }
    let mut branch_sets: Vec<[VertexId; 5]> = Vec::new();
    let m = good.len();
    for a in 0..m {
        for b in (a + 1)..m {
            for c in (b + 1)..m {
                for d in (c + 1)..m {
                    for e in (d + 1)..m {
                        branch_sets.push([good[a], good[b], good[c], good[d], good[e]]);
                    }
                }
            }
        }
    }
    let timed_out = std::sync::atomic::AtomicBool::new(false);
    let result = first_min_by_candidate(&branch_sets, 64, mode, |_, branch| {
        if deadline.expired() {
            timed_out.store(true, std::sync::atomic::Ordering::Relaxed);
            return None;
        }
        solve_arcs(&eff, *branch, deadline).map(|arcs| TK5Certificate { branch: *branch, arcs })
    });
    match result {
        Some((_, cert)) => {
            debug_assert!(verify_tk5(g, &cert, constraints));
            SearchOutcome::Found(cert)
        }
        None => {
            if timed_out.load(std::sync::atomic::Ordering::Relaxed) || deadline.expired() {
                SearchOutcome::Timeout
            } else {
                SearchOutcome::Absent
            }
        }
    }
}

/// Ten internally disjoint arcs joining the branch pairs, or `None`.
/// Arcs are tried shortest-first per pair; before recursing, every
/// remaining pair must still be connectable through free vertices.
fn solve_arcs(g: &Graph, branch: [VertexId; 5], deadline: Deadline) -> Option<Vec<PathSeq>> {
    let n = g.n();
    let mut free = vec![true; n];
    for &b in &branch {
        free[b] = false;
    }
    let mut arcs: Vec<Vec<VertexId>> = Vec::with_capacity(10);

    fn feasible(g: &Graph, branch: &[VertexId; 5], free: &[bool], from_pair: usize) -> bool {
        for &(i, j) in BRANCH_PAIRS.iter().skip(from_pair) {
            let (s, t) = (branch[i], branch[j]);
            if g.has_edge(s, t) {
                continue;
            }
            let mut mask = free.to_vec();
            mask[s] = true;
            mask[t] = true;
            if g.shortest_path_masked(s, t, &mask).is_none() {
                return false;
            }
        }
        true
    }

    fn rec(
        g: &Graph,
        branch: &[VertexId; 5],
        free: &mut Vec<bool>,
        arcs: &mut Vec<Vec<VertexId>>,
        deadline: Deadline,
    ) -> bool {
        if deadline.expired() {
            return false;
        }
        let k = arcs.len();
        if k == 10 {
            return true;
        }
        let (i, j) = BRANCH_PAIRS[k];
        let (s, t) = (branch[i], branch[j]);
        // Enumerate simple s-t paths through free vertices, shortest
        // first via iterative deepening on the interior length; len
        // counts the vertices before t, so len = 1 is the direct edge.
        let max_len = free.iter().filter(|&&f| f).count() + 1;
        for len in 1..=max_len {
            let mut stack = vec![s];
            if grow(g, t, len, free, &mut stack, arcs, branch, deadline) {
                return true;
            }
        }
        return false;

        #[allow(clippy::too_many_arguments)]
        fn grow(
            g: &Graph,
            t: VertexId,
            len: usize,
            free: &mut Vec<bool>,
            stack: &mut Vec<VertexId>,
            arcs: &mut Vec<Vec<VertexId>>,
            branch: &[VertexId; 5],
            deadline: Deadline,
        ) -> bool {
            if deadline.expired() {
                return false;
            }
            let head = *stack.last().unwrap();
            if stack.len() == len {
                if !g.has_edge(head, t) {
                    return false;
                }
                stack.push(t);
                let arc = stack.clone();
                let interior: Vec<VertexId> = arc[1..arc.len() - 1].to_vec();
                for &v in &interior {
                    free[v] = false;
                }
                arcs.push(arc);
                let ok = feasible(g, branch, free, arcs.len())
                    && rec(g, branch, free, arcs, deadline);
                if ok {
                    return true;
                }
                arcs.pop();
                for &v in &interior {
                    free[v] = true;
                }
                stack.pop();
                return false;
            }
            for &w in g.neighbors(head) {
                if !free[w] {
                    continue;
                }
                free[w] = false;
                stack.push(w);
                if grow(g, t, len, free, stack, arcs, branch, deadline) {
                    return true;
                }
                stack.pop();
                free[w] = true;
            }
            false
        }
    }

    if !feasible(g, &branch, &free, 0) {
        return None;
    }
    if rec(g, &branch, &mut free, &mut arcs, deadline) {
        Some(
            arcs.into_iter()
                .map(PathSeq::from_vec_unchecked)
                .collect(),
        )
    } else {
        None
    }
}

/// Assembles a TK5 from ten wiring entries, each a list of path
/// segments to be chained end to end (segments are re-oriented as
/// needed). The result is fully validated before being returned.
pub fn assemble_tk5(
    g: &Graph,
    branch: [VertexId; 5],
    wiring: &[Vec<PathSeq>],
) -> Result<TK5Certificate, CertError> {
    if wiring.len() != 10 {
        return Err(CertError::WrongArity(wiring.len()));
    }
    let mut set = std::collections::HashSet::new();
    for &v in &branch {
        if v >= g.n() {
            return Err(CertError::OutOfRange(v));
        }
        if !set.insert(v) {
            return Err(CertError::BranchNotDistinct);
        }
    }
    let mut arcs: Vec<PathSeq> = Vec::with_capacity(10);
    for (k, segments) in wiring.iter().enumerate() {
        let (i, j) = BRANCH_PAIRS[k];
        let (s, t) = (branch[i], branch[j]);
        let joined = chain_segments(s, t, segments).ok_or(CertError::BrokenChain(k, 0))?;
        if joined.first() != Some(&s) || joined.last() != Some(&t) {
            return Err(CertError::WrongEndpoints(k));
        }
        let path =
            PathSeq::new(g, joined).map_err(|e| CertError::ArcInvalid(k, e.to_string()))?;
        arcs.push(path);
    }
    // Pairwise internal disjointness, reported with the offending pair.
    for a in 0..10 {
        for &v in arcs[a].interior() {
            if branch.contains(&v) {
                return Err(CertError::ArcThroughBranch(a));
            }
        }
        for b in (a + 1)..10 {
            let ib: std::collections::HashSet<_> = arcs[b].interior().iter().collect();
            if arcs[a].interior().iter().any(|v| ib.contains(v)) {
                return Err(CertError::ArcsOverlap(a, b));
            }
        }
    }
    let cert = TK5Certificate { branch, arcs };
    debug_assert!(verify_tk5(g, &cert, &TK5Constraints::none()));
    Ok(cert)
}

/// Chains segments from `s` to `t`, flipping each segment as needed so
/// its start matches the running endpoint. Duplicate junction vertices
/// are collapsed.
fn chain_segments(s: VertexId, t: VertexId, segments: &[PathSeq]) -> Option<Vec<VertexId>> {
    let mut joined: Vec<VertexId> = vec![s];
    for seg in segments {
        let cur = *joined.last().unwrap();
        let vs = seg.vertices();
        let fwd = vs[0] == cur;
        let bwd = *vs.last().unwrap() == cur;
        if !fwd && !bwd {
            return None;
        }
        if fwd {
            joined.extend_from_slice(&vs[1..]);
        } else {
            joined.extend(vs[..vs.len() - 1].iter().rev());
        }
    }
    if *joined.last().unwrap() != t {
        return None;
    }
    Some(joined)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn k4_minus_scan() {
        assert!(find_k4_minus(&Graph::complete(4), &[]).is_some());
        assert!(find_k4_minus(&Graph::cycle(5), &[]).is_none());
        // K7 minus one edge, avoiding a vertex, still contains K6.
        let mut edges = vec![];
        for u in 0..7 {
            for v in (u + 1)..7 {
                if (u, v) != (5, 6) {
                    edges.push((u, v));
                }
            }
        }
        let g = build_graph(7, &edges).unwrap();
        let cert = find_k4_minus(&g, &[6]).unwrap();
        assert!(cert.verify(&g));
        assert!(!cert.vertices.contains(&6));
    }

    #[test]
    fn verify_tk5_on_k5() {
        let k5 = Graph::complete(5);
        let cert = identity_tk5(&k5);
        assert!(verify_tk5(&k5, &cert, &TK5Constraints::none()));
        assert!(!verify_tk5(
            &k5,
            &cert,
            &TK5Constraints::forbid_branch(&[2])
        ));
    }

    fn identity_tk5(g: &Graph) -> TK5Certificate {
        let branch = [0, 1, 2, 3, 4];
        let arcs = BRANCH_PAIRS
            .iter()
            .map(|&(i, j)| PathSeq::new(g, vec![branch[i], branch[j]]).unwrap())
            .collect();
        TK5Certificate { branch, arcs }
    }

    #[test]
    fn verify_tk5_in_k6_with_forbidden_sixth() {
        let k6 = Graph::complete(6);
        let cert = identity_tk5(&k6);
        assert!(verify_tk5(&k6, &cert, &TK5Constraints::forbid_branch(&[5])));
    }

    #[test]
    fn find_tk5_on_small_graphs() {
        let k6 = Graph::complete(6);
        match find_tk5(&k6, &TK5Constraints::none(), Deadline::none(), ExecMode::Sequential) {
            SearchOutcome::Found(cert) => {
                assert!(verify_tk5(&k6, &cert, &TK5Constraints::none()));
                assert_eq!(cert.branch, [0, 1, 2, 3, 4]);
            }
            other => panic!("expected found, got {other:?}"),
        }
        // Petersen: 3-regular, no vertex qualifies as a branch vertex.
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, 5 + (i + 2) % 5));
        }
        let pet = build_graph(10, &edges).unwrap();
        assert_eq!(
            find_tk5(&pet, &TK5Constraints::none(), Deadline::none(), ExecMode::Sequential),
            SearchOutcome::Absent
        );
    }

    #[test]
    fn find_tk5_respects_all_forbidden() {
        let k6 = Graph::complete(6);
        let all: Vec<VertexId> = (0..6).collect();
        assert_eq!(
            find_tk5(
                &k6,
                &TK5Constraints::forbid_branch(&all),
                Deadline::none(),
                ExecMode::Sequential
            ),
            SearchOutcome::Absent
        );
    }

    #[test]
    fn find_tk5_subdivided_k5() {
        // K5 with every edge subdivided once: 5 + 10 vertices.
        let mut edges = Vec::new();
        let mut next = 5;
        for i in 0..5usize {
            for j in (i + 1)..5 {
                edges.push((i, next));
                edges.push((next, j));
                next += 1;
            }
        }
        let g = build_graph(next, &edges).unwrap();
        match find_tk5(&g, &TK5Constraints::none(), Deadline::none(), ExecMode::Sequential) {
            SearchOutcome::Found(cert) => {
                assert!(verify_tk5(&g, &cert, &TK5Constraints::none()));
                assert_eq!(cert.branch, [0, 1, 2, 3, 4]);
                assert!(cert.arcs.iter().all(|a| a.len() == 3));
            }
            other => panic!("expected found, got {other:?}"),
        }
    }

    #[test]
    fn parallel_and_sequential_agree() {
        let k7 = Graph::complete(7);
        let seq = find_tk5(&k7, &TK5Constraints::none(), Deadline::none(), ExecMode::Sequential);
        let par = find_tk5(&k7, &TK5Constraints::none(), Deadline::none(), ExecMode::Parallel);
        assert_eq!(seq, par);
    }

    #[test]
    fn assemble_identity_and_detour() {
        let k5 = Graph::complete(5);
        let wiring: Vec<Vec<PathSeq>> = BRANCH_PAIRS
            .iter()
            .map(|&(i, j)| vec![PathSeq::new(&k5, vec![i, j]).unwrap()])
            .collect();
        let cert = assemble_tk5(&k5, [0, 1, 2, 3, 4], &wiring).unwrap();
        assert!(verify_tk5(&k5, &cert, &TK5Constraints::none()));

        // K6 with arc 0-1 routed through 5.
        let k6 = Graph::complete(6);
        let mut wiring: Vec<Vec<PathSeq>> = BRANCH_PAIRS
            .iter()
            .map(|&(i, j)| vec![PathSeq::new(&k6, vec![i, j]).unwrap()])
            .collect();
        wiring[0] = vec![PathSeq::new(&k6, vec![0, 5, 1]).unwrap()];
        let cert = assemble_tk5(&k6, [0, 1, 2, 3, 4], &wiring).unwrap();
        assert!(verify_tk5(&k6, &cert, &TK5Constraints::none()));

        // Routing two arcs through the same interior vertex fails.
        let mut bad = wiring.clone();
        bad[9] = vec![PathSeq::new(&k6, vec![3, 5, 4]).unwrap()];
        match assemble_tk5(&k6, [0, 1, 2, 3, 4], &bad) {
            Err(CertError::ArcsOverlap(0, 9)) => {}
            other => panic!("expected overlap error, got {other:?}"),
        }
    }

    #[test]
    fn assemble_chains_multi_segment_arcs() {
        let k6 = Graph::complete(6);
        let mut wiring: Vec<Vec<PathSeq>> = BRANCH_PAIRS
            .iter()
            .map(|&(i, j)| vec![PathSeq::new(&k6, vec![i, j]).unwrap()])
            .collect();
        // Arc 0-1 as 0-5 then 1-5 (second segment flipped on the fly).
        wiring[0] = vec![
            PathSeq::new(&k6, vec![0, 5]).unwrap(),
            PathSeq::new(&k6, vec![1, 5]).unwrap(),
        ];
        let cert = assemble_tk5(&k6, [0, 1, 2, 3, 4], &wiring).unwrap();
        assert_eq!(cert.arcs[0].vertices(), &[0, 5, 1]);
    }

    #[test]
    fn mutation_rejected_by_verifier() {
        let k6 = Graph::complete(6);
        let mut cert = identity_tk5(&k6);
        cert.branch[4] = 5;
        // Arcs still end at vertex 4, so the certificate must fail.
        assert!(!verify_tk5(&k6, &cert, &TK5Constraints::none()));
    }

    #[test]
    fn constrained_edges_respected() {
        // Restrict vertex 0 to see only 1 and 2: no TK5 can use 0 as a
        // branch vertex (needs degree 4), and arcs through 0 may only
        // use the two permitted edges.
        let k6 = Graph::complete(6);
        let cons = TK5Constraints::restrict_vertex(0, &[1, 2]);
        match find_tk5(&k6, &cons, Deadline::none(), ExecMode::Sequential) {
            SearchOutcome::Found(cert) => {
                assert!(verify_tk5(&k6, &cert, &cons));
                assert!(!cert.uses_branch(0));
            }
            other => panic!("K6 minus a vertex still has K5: {other:?}"),
        }
    }

    #[test]
    fn timeout_is_reported_distinctly() {
        let k8 = Graph::complete(8);
        let out = find_tk5(
            &k8,
            &TK5Constraints::none(),
            Deadline::after_ms(0),
            ExecMode::Sequential,
        );
        assert_eq!(out, SearchOutcome::Timeout);
    }
}
