//! The three dichotomy engines: two disjoint paths vs. 3-planar
//! witness, society linkage vs. 3-planar witness, and cycle through
//! three vertices vs. the three obstruction shapes.
//!
//! Search first, certificate second: the path branch is an exhaustive
//! backtracking search, and only after it fails is the witness or
//! obstruction extracted (the dichotomy theorems guarantee extraction
//! succeeds exactly then). Every returned object re-verifies.

use crate::bridges::is_two_connected;
use crate::exec::Deadline;
use crate::graph::{CycleSeq, Graph, PathSeq, VertexId};
use crate::planarity::{test_disc_embeddable, verify_society_witness, SocietyWitness};
use serde::{Deserialize, Serialize};
use thiserror::Error;

type VertexPathPair = (Vec<VertexId>, Vec<VertexId>);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LinkageError {
    #[error("terminals are not distinct")]
    TerminalsNotDistinct,
    #[error("vertex {0} out of range")]
    OutOfRange(VertexId),
    #[error("boundary has {0} vertices, need at least 4")]
    BoundaryTooShort(usize),
    #[error("graph is not 2-connected")]
    NotTwoConnected,
    #[error("search deadline expired")]
    Timeout,
    #[error("dichotomy extraction failed: {0}")]
    DichotomyUnavailable(String),
}

// ---------------------------------------------------------------------
// Exhaustive disjoint-path search.

/// Two fully vertex-disjoint paths s1->t1 and s2->t2, if any exist.
/// Backtracking over the first path with reachability pruning; the
/// second path is a shortest path in the remainder.
pub fn find_two_disjoint_paths(
    g: &Graph,
    s1: VertexId,
    t1: VertexId,
    s2: VertexId,
    t2: VertexId,
    deadline: Deadline,
) -> Result<Option<(PathSeq, PathSeq)>, LinkageError> {
    let n = g.n();
    let mut used = vec![false; n];
    used[s1] = true;
    let mut path1 = vec![s1];

    fn rec(
        g: &Graph,
        t1: VertexId,
        s2: VertexId,
        t2: VertexId,
        used: &mut Vec<bool>,
        path1: &mut Vec<VertexId>,
        deadline: Deadline,
    ) -> Result<Option<VertexPathPair>, LinkageError> {
        if deadline.expired() {
            return Err(LinkageError::Timeout);
        }
        let head = *path1.last().unwrap();
        if head == t1 {
            let mut mask: Vec<bool> = used.iter().map(|&u| !u).collect();
            mask[s2] = true;
            mask[t2] = true;
            if let Some(p2) = g.shortest_path_masked(s2, t2, &mask) {
                return Ok(Some((path1.clone(), p2)));
            }
            return Ok(None);
        }
        for &w in g.neighbors(head) {
            if used[w] || w == s2 || w == t2 {
                continue;
            }
            used[w] = true;
            path1.push(w);
            // Prune: the rest of path1 must stay feasible, and s2-t2
            // must still be connectable around it.
            let mut mask: Vec<bool> = used.iter().map(|&u| !u).collect();
            mask[w] = true;
            mask[s2] = false;
            mask[t2] = false;
            mask[t1] = true;
            let p1_ok = g.shortest_path_masked(w, t1, &mask).is_some();
            let p2_ok = {
                let mut m2: Vec<bool> = used.iter().map(|&u| !u).collect();
                m2[s2] = true;
                m2[t2] = true;
                g.shortest_path_masked(s2, t2, &m2).is_some()
            };
            if p1_ok && p2_ok {
                if let Some(found) = rec(g, t1, s2, t2, used, path1, deadline)? {
                    return Ok(Some(found));
                }
            }
            path1.pop();
            used[w] = false;
        }
        Ok(None)
    }

    let found = rec(g, t1, s2, t2, &mut used, &mut path1, deadline)?;
    Ok(found.map(|(p1, p2)| {
        (
            PathSeq::new(g, p1).expect("search yields valid paths"),
            PathSeq::new(g, p2).expect("search yields valid paths"),
        )
    }))
}

// ---------------------------------------------------------------------
// Society witness extraction.

/// Searches for a 3-planar witness with the given boundary order by
/// backtracking over part extractions, candidate parts largest-first.
pub fn extract_society_witness(
    g: &Graph,
    boundary: &[VertexId],
    deadline: Deadline,
) -> Result<Option<SocietyWitness>, LinkageError> {
    let n = g.n();
    let mut forbidden = vec![false; n];
    for &b in boundary {
        forbidden[b] = true;
    }
    let alive = vec![true; n];
    let mut visited: std::collections::HashSet<Graph> = std::collections::HashSet::new();
    let mut parts = Vec::new();
    extract_rec(
        g,
        g,
        &alive,
        &forbidden,
        &mut parts,
        boundary,
        &mut visited,
        deadline,
    )
}

#[allow(clippy::too_many_arguments)]
fn extract_rec(
    g0: &Graph,
    cur: &Graph,
    alive: &[bool],
    forbidden: &[bool],
    parts: &mut Vec<Vec<VertexId>>,
    boundary: &[VertexId],
    visited: &mut std::collections::HashSet<Graph>,
    deadline: Deadline,
) -> Result<Option<SocietyWitness>, LinkageError> {
    if deadline.expired() {
        return Err(LinkageError::Timeout);
    }
    if let Some(embedding) = test_disc_embeddable(cur, boundary)
        .map_err(|e| LinkageError::DichotomyUnavailable(e.to_string()))?
    {
        let w = SocietyWitness {
            parts: parts.clone(),
            boundary: boundary.to_vec(),
            embedding,
        };
        debug_assert!(verify_society_witness(g0, &w));
        return Ok(Some(w));
    }
    // Candidate parts: components left by deleting up to 3 alive
    // vertices, avoiding the boundary and earlier parts' neighborhoods.
    let n = cur.n();
    let alive_verts: Vec<VertexId> = (0..n).filter(|&v| alive[v]).collect();
    let mut cands: Vec<Vec<VertexId>> = Vec::new();
    let mut seen: std::collections::HashSet<Vec<VertexId>> = std::collections::HashSet::new();
    for cut in subsets_up_to_three(&alive_verts) {
        let mut mask: Vec<bool> = (0..n).map(|v| alive[v]).collect();
        for &c in &cut {
            mask[c] = false;
        }
        for comp in cur.components_masked(&mask) {
            if comp.iter().any(|&v| forbidden[v]) {
                continue;
            }
            if comp.iter().all(|&v| cur.degree(v) == 0) {
                continue;
            }
            let nb = cur.neighborhood_of_set(&comp);
            if nb.len() > 3 {
                continue;
            }
            if seen.insert(comp.clone()) {
                cands.push(comp);
            }
        }
    }
    cands.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    for part in cands {
        let nb = cur.neighborhood_of_set(&part);
        let mut next_edges: Vec<(VertexId, VertexId)> = cur
            .edges()
            .into_iter()
            .filter(|&(u, v)| !part.contains(&u) && !part.contains(&v))
            .collect();
        for i in 0..nb.len() {
            for j in (i + 1)..nb.len() {
                next_edges.push((nb[i], nb[j]));
            }
        }
        let next = Graph::build(n, &next_edges).expect("reduction preserves validity");
        if !visited.insert(next.clone()) {
            continue;
        }
        let mut next_alive = alive.to_vec();
        for &v in &part {
            next_alive[v] = false;
        }
        let mut next_forbidden = forbidden.to_vec();
        for &v in &nb {
            next_forbidden[v] = true;
        }
        parts.push(part);
        if let Some(w) = extract_rec(
            g0,
            &next,
            &next_alive,
            &next_forbidden,
            parts,
            boundary,
            visited,
            deadline,
        )? {
            return Ok(Some(w));
        }
        parts.pop();
    }
    Ok(None)
}

fn subsets_up_to_three(verts: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mut out = vec![vec![]];
    let m = verts.len();
    for i in 0..m {
        out.push(vec![verts[i]]);
        for j in (i + 1)..m {
            out.push(vec![verts[i], verts[j]]);
            for k in (j + 1)..m {
                out.push(vec![verts[i], verts[j], verts[k]]);
            }
        }
    }
    out
}

// ---------------------------------------------------------------------
// Two disjoint paths dichotomy.

#[derive(Clone, Debug)]
pub enum TwoPathsOutcome {
    /// Disjoint paths s1->t1 and s2->t2.
    Paths(PathSeq, PathSeq),
    /// 3-planar witness with boundary order (s1, s2, t1, t2).
    Witness(SocietyWitness),
}

/// Exactly one of: disjoint paths s1->t1, s2->t2, or a 3-planar witness
/// on boundary (s1, s2, t1, t2).
pub fn two_disjoint_paths(
    g: &Graph,
    s1: VertexId,
    s2: VertexId,
    t1: VertexId,
    t2: VertexId,
    deadline: Deadline,
) -> Result<TwoPathsOutcome, LinkageError> {
    let terms = [s1, s2, t1, t2];
    for &t in &terms {
        if t >= g.n() {
            return Err(LinkageError::OutOfRange(t));
        }
    }
    let set: std::collections::HashSet<_> = terms.iter().collect();
    if set.len() != 4 {
        return Err(LinkageError::TerminalsNotDistinct);
    }
    if let Some((p1, p2)) = find_two_disjoint_paths(g, s1, t1, s2, t2, deadline)? {
        return Ok(TwoPathsOutcome::Paths(p1, p2));
    }
    match extract_society_witness(g, &[s1, s2, t1, t2], deadline)? {
        Some(w) => Ok(TwoPathsOutcome::Witness(w)),
        None => Err(LinkageError::DichotomyUnavailable(
            "no disjoint paths and no witness".into(),
        )),
    }
}

// ---------------------------------------------------------------------
// Society linkage dichotomy.

#[derive(Clone, Debug)]
pub enum SocietyOutcome {
    /// Indices i<j<k<l and disjoint paths v_i -> v_k, v_j -> v_l.
    Crossing {
        indices: (usize, usize, usize, usize),
        paths: (PathSeq, PathSeq),
    },
    Witness(SocietyWitness),
}

/// Either a crossing pair of disjoint paths over the boundary sequence,
/// or a 3-planar witness realizing the boundary order.
pub fn society_linkage(
    g: &Graph,
    boundary: &[VertexId],
    deadline: Deadline,
) -> Result<SocietyOutcome, LinkageError> {
    if boundary.len() < 4 {
        return Err(LinkageError::BoundaryTooShort(boundary.len()));
    }
    let set: std::collections::HashSet<_> = boundary.iter().collect();
    if set.len() != boundary.len() {
        return Err(LinkageError::TerminalsNotDistinct);
    }
    for &b in boundary {
        if b >= g.n() {
            return Err(LinkageError::OutOfRange(b));
        }
    }
    let m = boundary.len();
    for i in 0..m {
        for j in (i + 1)..m {
            for k in (j + 1)..m {
                for l in (k + 1)..m {
                    if let Some(paths) = find_two_disjoint_paths(
                        g,
                        boundary[i],
                        boundary[k],
                        boundary[j],
                        boundary[l],
                        deadline,
                    )? {
                        return Ok(SocietyOutcome::Crossing {
                            indices: (i, j, k, l),
                            paths,
                        });
                    }
                }
            }
        }
    }
    match extract_society_witness(g, boundary, deadline)? {
        Some(w) => Ok(SocietyOutcome::Witness(w)),
        None => Err(LinkageError::DichotomyUnavailable(
            "no crossing linkage and no witness".into(),
        )),
    }
}

// ---------------------------------------------------------------------
// Cycle through three vertices.

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ObstructionKind {
    Disjoint2Cut,
    SharedVertexCuts,
    ThreeDisjointCuts,
}

/// Obstruction to a cycle through three prescribed vertices, in one of
/// the three shapes of the Watkins-Mesner characterization.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CycleObstruction {
    pub kind: ObstructionKind,
    /// Per-terminal 2-cuts (all equal for the first kind).
    pub cuts: [Vec<VertexId>; 3],
    /// Per-terminal stranded parts, unions of components.
    pub parts: [Vec<VertexId>; 3],
    /// The shared cut vertex for the second kind.
    pub shared: Option<VertexId>,
    /// The two components left after removing all parts, third kind.
    pub spine: Option<(Vec<VertexId>, Vec<VertexId>)>,
}

fn is_union_of_components(g: &Graph, cut: &[VertexId], d: &[VertexId]) -> bool {
    if d.is_empty() {
        return false;
    }
    if d.iter().any(|v| cut.contains(v)) {
        return false;
    }
    let mut mask = vec![true; g.n()];
    for &c in cut {
        mask[c] = false;
    }
    let comps = g.components_masked(&mask);
    let dset: std::collections::HashSet<_> = d.iter().copied().collect();
    let mut covered = 0;
    for comp in comps {
        let inside = comp.iter().filter(|v| dset.contains(v)).count();
        if inside != 0 && inside != comp.len() {
            return false;
        }
        covered += inside;
    }
    covered == dset.len()
}

fn disconnects(g: &Graph, cut: &[VertexId]) -> bool {
    let mut mask = vec![true; g.n()];
    for &c in cut {
        mask[c] = false;
    }
    g.components_masked(&mask).len() >= 2
}

impl CycleObstruction {
    /// Re-checks the chosen shape's conditions verbatim.
    pub fn verify(&self, g: &Graph, ys: [VertexId; 3]) -> bool {
        let parts_disjoint = {
            let mut seen = std::collections::HashSet::new();
            self.parts.iter().flatten().all(|&v| seen.insert(v))
        };
        if !parts_disjoint {
            return false;
        }
        for i in 0..3 {
            if !self.parts[i].contains(&ys[i]) {
                return false;
            }
            if self.cuts[i].len() != 2 || !disconnects(g, &self.cuts[i]) {
                return false;
            }
            if !is_union_of_components(g, &self.cuts[i], &self.parts[i]) {
                return false;
            }
        }
        match self.kind {
            ObstructionKind::Disjoint2Cut => {
                self.cuts[0] == self.cuts[1] && self.cuts[1] == self.cuts[2]
            }
            ObstructionKind::SharedVertexCuts => {
                let Some(z) = self.shared else { return false };
                for c in &self.cuts {
                    if !c.contains(&z) {
                        return false;
                    }
                }
                let rests: Vec<VertexId> = self
                    .cuts
                    .iter()
                    .map(|c| *c.iter().find(|&&v| v != z).unwrap())
                    .collect();
                rests[0] != rests[1] && rests[1] != rests[2] && rests[0] != rests[2]
            }
            ObstructionKind::ThreeDisjointCuts => {
                let mut all_cut = std::collections::HashSet::new();
                for c in &self.cuts {
                    for &v in c {
                        if !all_cut.insert(v) {
                            return false;
                        }
                    }
                }
                let Some((r1, r2)) = &self.spine else { return false };
                let mut mask = vec![true; g.n()];
                for p in &self.parts {
                    for &v in p {
                        mask[v] = false;
                    }
                }
                let comps = g.components_masked(&mask);
                if comps.len() != 2 {
                    return false;
                }
                let mut sorted_spine = [r1.clone(), r2.clone()];
                sorted_spine.sort();
                let mut sorted_comps = [comps[0].clone(), comps[1].clone()];
                sorted_comps.sort();
                if sorted_spine != sorted_comps {
                    return false;
                }
                for comp in &comps {
                    for c in &self.cuts {
                        if comp.iter().filter(|v| c.contains(v)).count() != 1 {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum CycleThreeOutcome {
    Cycle(CycleSeq),
    Obstruction(CycleObstruction),
}

/// Either a cycle through all three terminals, or a verified
/// obstruction. The graph must be 2-connected.
pub fn cycle_through_three(
    g: &Graph,
    y1: VertexId,
    y2: VertexId,
    y3: VertexId,
    deadline: Deadline,
) -> Result<CycleThreeOutcome, LinkageError> {
    let ys = [y1, y2, y3];
    for &y in &ys {
        if y >= g.n() {
            return Err(LinkageError::OutOfRange(y));
        }
    }
    if y1 == y2 || y2 == y3 || y1 == y3 {
        return Err(LinkageError::TerminalsNotDistinct);
    }
    if !is_two_connected(g) {
        return Err(LinkageError::NotTwoConnected);
    }
    if let Some(cyc) = find_cycle_through(g, y1, y2, y3, deadline)? {
        return Ok(CycleThreeOutcome::Cycle(cyc));
    }
    if let Some(obs) = extract_cycle_obstruction(g, ys, deadline)? {
        debug_assert!(obs.verify(g, ys));
        return Ok(CycleThreeOutcome::Obstruction(obs));
    }
    Err(LinkageError::DichotomyUnavailable(
        "no cycle and no obstruction".into(),
    ))
}

/// Exhaustive search for three internally disjoint segments
/// y1->y2, y2->y3, y3->y1.
pub fn find_cycle_through(
    g: &Graph,
    y1: VertexId,
    y2: VertexId,
    y3: VertexId,
    deadline: Deadline,
) -> Result<Option<CycleSeq>, LinkageError> {
    let n = g.n();
    let mut used = vec![false; n];
    used[y1] = true;
    let mut seg = vec![y1];

    fn rec(
        g: &Graph,
        y2: VertexId,
        y3: VertexId,
        used: &mut Vec<bool>,
        seg: &mut Vec<VertexId>,
        deadline: Deadline,
    ) -> Result<Option<Vec<VertexId>>, LinkageError> {
        if deadline.expired() {
            return Err(LinkageError::Timeout);
        }
        let head = *seg.last().unwrap();
        if head == y2 {
            let y1 = seg[0];
            if let Some((mut leg_a, leg_b)) = two_legs(g, y2, y1, y3, used, deadline)? {
                // Assemble y1 ... y2 ... y3 ... back towards y1.
                let mut cyc = seg.clone();
                leg_a.remove(0);
                cyc.extend(leg_a);
                let mut back = leg_b;
                back.pop(); // drop y3 (already present)
                back.remove(0); // drop y1 (start of cycle)
                back.reverse();
                cyc.extend(back);
                return Ok(Some(cyc));
            }
            return Ok(None);
        }
        for &w in g.neighbors(head) {
            if used[w] || w == y3 {
                continue;
            }
            used[w] = true;
            seg.push(w);
            let mut mask: Vec<bool> = used.iter().map(|&u| !u).collect();
            mask[w] = true;
            mask[y2] = true;
            mask[y3] = false;
            if g.shortest_path_masked(w, y2, &mask).is_some() {
                if let Some(found) = rec(g, y2, y3, used, seg, deadline)? {
                    return Ok(Some(found));
                }
            }
            seg.pop();
            used[w] = false;
        }
        Ok(None)
    }

    /// Internally disjoint legs a->t and b->t avoiding `used` except at
    /// a and b themselves; the b-leg is found by backtracking too.
    fn two_legs(
        g: &Graph,
        a: VertexId,
        b: VertexId,
        t: VertexId,
        used: &[bool],
        deadline: Deadline,
    ) -> Result<Option<VertexPathPair>, LinkageError> {
        let mut used_a = used.to_vec();
        let mut leg = vec![a];
        fn rec2(
            g: &Graph,
            b: VertexId,
            t: VertexId,
            used: &mut Vec<bool>,
            leg: &mut Vec<VertexId>,
            deadline: Deadline,
        ) -> Result<Option<VertexPathPair>, LinkageError> {
            if deadline.expired() {
                return Err(LinkageError::Timeout);
            }
            let head = *leg.last().unwrap();
            if head == t {
                let mut mask: Vec<bool> = used.iter().map(|&u| !u).collect();
                mask[b] = true;
                mask[t] = false;
                // The second leg ends at t, entering from outside leg_a.
                let mut best: Option<Vec<VertexId>> = None;
                for &w in g.neighbors(t) {
                    if !mask[w] {
                        continue;
                    }
                    if let Some(mut p) = g.shortest_path_masked(b, w, &mask) {
                        p.push(t);
                        best = Some(p);
                        break;
                    }
                }
                return Ok(best.map(|p| (leg.clone(), p)));
            }
            for &w in g.neighbors(head) {
                if used[w] || w == b {
                    continue;
                }
                used[w] = true;
                leg.push(w);
                let mut mask: Vec<bool> = used.iter().map(|&u| !u).collect();
                mask[w] = true;
                mask[t] = true;
                mask[b] = false;
                if g.shortest_path_masked(w, t, &mask).is_some() {
                    if let Some(found) = rec2(g, b, t, used, leg, deadline)? {
                        return Ok(Some(found));
                    }
                }
                leg.pop();
                used[w] = false;
            }
            Ok(None)
        }
        rec2(g, b, t, &mut used_a, &mut leg, deadline)
    }

    let found = rec(g, y2, y3, &mut used, &mut seg, deadline)?;
    match found {
        Some(verts) => Ok(Some(
            CycleSeq::new(g, verts).expect("assembled cycle is valid"),
        )),
        None => Ok(None),
    }
}

/// Obstruction extraction: 2-cuts are enumerated and classified,
/// preferring the single-cut shape, then the shared-vertex shape, then
/// three disjoint cuts.
fn extract_cycle_obstruction(
    g: &Graph,
    ys: [VertexId; 3],
    deadline: Deadline,
) -> Result<Option<CycleObstruction>, LinkageError> {
    let n = g.n();
    let [y1, y2, y3] = ys;
    let comp_of = |cut: &[VertexId], v: VertexId| -> Vec<VertexId> {
        let mut mask = vec![true; n];
        for &c in cut {
            mask[c] = false;
        }
        g.components_masked(&mask)
            .into_iter()
            .find(|c| c.contains(&v))
            .unwrap_or_default()
    };

    // Kind i: one 2-cut splitting the terminals into three components.
    for a in 0..n {
        for b in (a + 1)..n {
            if ys.contains(&a) || ys.contains(&b) {
                continue;
            }
            let cut = vec![a, b];
            let d1 = comp_of(&cut, y1);
            let d2 = comp_of(&cut, y2);
            let d3 = comp_of(&cut, y3);
            if d1.is_empty() || d1 == d2 || d2 == d3 || d1 == d3 {
                continue;
            }
            let obs = CycleObstruction {
                kind: ObstructionKind::Disjoint2Cut,
                cuts: [cut.clone(), cut.clone(), cut],
                parts: [d1, d2, d3],
                shared: None,
                spine: None,
            };
            if obs.verify(g, ys) {
                return Ok(Some(obs));
            }
        }
    }

    // Kind ii: cuts {z, s_i} sharing z, distinct s_i, disjoint parts.
    for z in 0..n {
        if deadline.expired() {
            return Err(LinkageError::Timeout);
        }
        if ys.contains(&z) {
            continue;
        }
        let strand = |y: VertexId, s: VertexId| -> Option<Vec<VertexId>> {
            if s == z || s == y {
                return None;
            }
            let cut = [z, s];
            if !disconnects(g, &cut) {
                return None;
            }
            let d = comp_of(&cut, y);
            if d.is_empty() {
                None
            } else {
                Some(d)
            }
        };
        for s1 in 0..n {
            let Some(d1) = strand(y1, s1) else { continue };
            if d1.contains(&y2) || d1.contains(&y3) {
                continue;
            }
            for s2 in 0..n {
                if s2 == s1 {
                    continue;
                }
                let Some(d2) = strand(y2, s2) else { continue };
                if d2.iter().any(|v| d1.contains(v)) || d2.contains(&y3) {
                    continue;
                }
                for s3 in 0..n {
                    if s3 == s1 || s3 == s2 {
                        continue;
                    }
                    let Some(d3) = strand(y3, s3) else { continue };
                    if d3.iter().any(|v| d1.contains(v) || d2.contains(v)) {
                        continue;
                    }
                    let obs = CycleObstruction {
                        kind: ObstructionKind::SharedVertexCuts,
                        cuts: [vec![z, s1], vec![z, s2], vec![z, s3]],
                        parts: [d1.clone(), d2.clone(), d3.clone()],
                        shared: Some(z),
                        spine: None,
                    };
                    if obs.verify(g, ys) {
                        return Ok(Some(obs));
                    }
                }
            }
        }
    }

    // Kind iii: pairwise disjoint cuts; minimal parts are grown to
    // absorb stray components until exactly two spine components remain.
    let pairs: Vec<[VertexId; 2]> = {
        let mut out = Vec::new();
        for a in 0..n {
            for b in (a + 1)..n {
                if !ys.contains(&a) && !ys.contains(&b) && disconnects(g, &[a, b]) {
                    out.push([a, b]);
                }
            }
        }
        out
    };
    for c1 in &pairs {
        if deadline.expired() {
            return Err(LinkageError::Timeout);
        }
        for c2 in &pairs {
            if c1.iter().any(|v| c2.contains(v)) {
                continue;
            }
            for c3 in &pairs {
                if c1.iter().any(|v| c3.contains(v)) || c2.iter().any(|v| c3.contains(v)) {
                    continue;
                }
                let cuts = [c1.to_vec(), c2.to_vec(), c3.to_vec()];
                let all_cut: Vec<VertexId> = cuts.iter().flatten().copied().collect();
                let mut parts = [
                    comp_of(&cuts[0], y1),
                    comp_of(&cuts[1], y2),
                    comp_of(&cuts[2], y3),
                ];
                if parts.iter().any(|p| p.is_empty()) {
                    continue;
                }
                if parts.iter().any(|p| p.iter().any(|v| all_cut.contains(v))) {
                    continue;
                }
                let mut ok = {
                    let mut seen = std::collections::HashSet::new();
                    parts.iter().flatten().all(|&v| seen.insert(v))
                };
                if !ok {
                    continue;
                }
                loop {
                    let mut mask = vec![true; n];
                    for p in &parts {
                        for &v in p {
                            mask[v] = false;
                        }
                    }
                    let comps = g.components_masked(&mask);
                    let stray = comps
                        .iter()
                        .find(|c| !c.iter().any(|v| all_cut.contains(v)))
                        .cloned();
                    let Some(stray) = stray else { break };
                    let mut absorbed = false;
                    for i in 0..3 {
                        let nb = g.neighborhood_of_set(&stray);
                        if nb.iter().all(|v| cuts[i].contains(v))
                            && !stray.iter().any(|&v| ys.contains(&v))
                        {
                            parts[i].extend(stray.iter().copied());
                            parts[i].sort_unstable();
                            absorbed = true;
                            break;
                        }
                    }
                    if !absorbed {
                        ok = false;
                        break;
                    }
                }
                if !ok {
                    continue;
                }
                let mut mask = vec![true; n];
                for p in &parts {
                    for &v in p {
                        mask[v] = false;
                    }
                }
                let comps = g.components_masked(&mask);
                if comps.len() != 2 {
                    continue;
                }
                let obs = CycleObstruction {
                    kind: ObstructionKind::ThreeDisjointCuts,
                    cuts,
                    parts,
                    shared: None,
                    spine: Some((comps[0].clone(), comps[1].clone())),
                };
                if obs.verify(g, ys) {
                    return Ok(Some(obs));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn two_paths_in_k4() {
        let k4 = Graph::complete(4);
        match two_disjoint_paths(&k4, 0, 1, 2, 3, Deadline::none()).unwrap() {
            TwoPathsOutcome::Paths(p1, p2) => {
                assert_eq!((p1.first(), p1.last()), (0, 2));
                assert_eq!((p2.first(), p2.last()), (1, 3));
                assert!(p1.vertices().iter().all(|v| !p2.contains(*v)));
            }
            _ => panic!("K4 links any two pairs"),
        }
    }

    #[test]
    fn crossing_pairs_on_c4_yield_witness() {
        let c4 = Graph::cycle(4);
        match two_disjoint_paths(&c4, 0, 1, 2, 3, Deadline::none()).unwrap() {
            TwoPathsOutcome::Witness(w) => {
                assert!(verify_society_witness(&c4, &w));
                assert_eq!(w.boundary, vec![0, 1, 2, 3]);
                assert!(w.parts.is_empty());
            }
            _ => panic!("crossing pairs on a cycle cannot be linked"),
        }
    }

    #[test]
    fn star_yields_witness() {
        let star = build_graph(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        match two_disjoint_paths(&star, 1, 2, 3, 4, Deadline::none()).unwrap() {
            TwoPathsOutcome::Witness(w) => assert!(verify_society_witness(&star, &w)),
            _ => panic!("both paths would need the center"),
        }
    }

    #[test]
    fn rejects_repeated_terminals() {
        let k4 = Graph::complete(4);
        assert!(matches!(
            two_disjoint_paths(&k4, 0, 0, 1, 2, Deadline::none()),
            Err(LinkageError::TerminalsNotDistinct)
        ));
    }

    #[test]
    fn society_linkage_on_c5_is_witness() {
        let c5 = Graph::cycle(5);
        match society_linkage(&c5, &[0, 1, 2, 3, 4], Deadline::none()).unwrap() {
            SocietyOutcome::Witness(w) => assert!(verify_society_witness(&c5, &w)),
            _ => panic!("outerplanar cycle admits no crossing linkage"),
        }
    }

    #[test]
    fn society_linkage_on_k5_crosses() {
        let k5 = Graph::complete(5);
        match society_linkage(&k5, &[0, 1, 2, 3, 4], Deadline::none()).unwrap() {
            SocietyOutcome::Crossing { indices, paths } => {
                assert_eq!(indices, (0, 1, 2, 3));
                assert!(paths.0.vertices().iter().all(|v| !paths.1.contains(*v)));
            }
            _ => panic!("K5 has crossing linkages"),
        }
    }

    #[test]
    fn society_linkage_with_permuted_square() {
        // C4 queried in crossed order: the crossing request aligns with
        // actual edges, so the linkage exists.
        let c4 = Graph::cycle(4);
        match society_linkage(&c4, &[0, 2, 1, 3], Deadline::none()).unwrap() {
            SocietyOutcome::Crossing { .. } => {}
            _ => panic!("the permuted order is linkable via the square's edges"),
        }
    }

    #[test]
    fn cycle_three_in_k4_and_prism() {
        let k4 = Graph::complete(4);
        match cycle_through_three(&k4, 0, 1, 2, Deadline::none()).unwrap() {
            CycleThreeOutcome::Cycle(c) => {
                assert!(c.contains(0) && c.contains(1) && c.contains(2));
            }
            _ => panic!("K4 has a triangle"),
        }
        let prism = build_graph(
            6,
            &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)],
        )
        .unwrap();
        match cycle_through_three(&prism, 0, 1, 2, Deadline::none()).unwrap() {
            CycleThreeOutcome::Cycle(c) => {
                assert!(c.contains(0) && c.contains(1) && c.contains(2));
            }
            _ => panic!("prism triangle"),
        }
    }

    #[test]
    fn k23_obstruction_is_kind_one() {
        let g = build_graph(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        match cycle_through_three(&g, 2, 3, 4, Deadline::none()).unwrap() {
            CycleThreeOutcome::Obstruction(obs) => {
                assert_eq!(obs.kind, ObstructionKind::Disjoint2Cut);
                assert_eq!(obs.cuts[0], vec![0, 1]);
                assert!(obs.verify(&g, [2, 3, 4]));
            }
            _ => panic!("every cycle of K2,3 misses one terminal"),
        }
    }

    #[test]
    fn cycle_three_requires_two_connected() {
        let path = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            cycle_through_three(&path, 0, 1, 2, Deadline::none()),
            Err(LinkageError::NotTwoConnected)
        ));
    }

    #[test]
    fn witness_extraction_with_nontrivial_part() {
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 0)];
        edges.extend([(4, 0), (4, 5), (5, 1), (5, 2)]);
        let g = build_graph(6, &edges).unwrap();
        match two_disjoint_paths(&g, 0, 1, 2, 3, Deadline::none()).unwrap() {
            TwoPathsOutcome::Paths(p1, p2) => {
                assert!(p1.vertices().iter().all(|v| !p2.contains(*v)));
            }
            TwoPathsOutcome::Witness(w) => {
                assert!(verify_society_witness(&g, &w));
            }
        }
    }
}
