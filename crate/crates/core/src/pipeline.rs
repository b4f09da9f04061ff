//! The tuple pipeline: the apex-wheel gadget and its recognizer, 9- and
//! 11-tuple validation, the Y/Z, A/B/C and P/Q path-system searches, the
//! TK5 assembly templates they feed, and the top-level classifier that
//! returns one of four verified outcomes.

use crate::bridges::{enumerate_bridges, is_two_connected, BridgeRec, SubgraphSpec};
use crate::exec::{Deadline, ExecMode};
use crate::graph::{is_induced_path, Graph, PathSeq, Separation, VertexId};
use crate::linkage::find_two_disjoint_paths;
use crate::nonsep::{
    check_reduction_preconditions, restricted_graph, reduction_step, Lemma32Outcome, NonsepError,
    PathOrTk5, WiringBuilder,
};
use crate::subdivision::{
    find_k4_minus, find_tk5, verify_tk5, K4MinusCertificate, SearchOutcome, TK5Certificate,
    TK5Constraints,
};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PipelineError {
    #[error("separation is not order 5")]
    WrongSeparationOrder,
    #[error("invalid nine-tuple: {0}")]
    BadNineTuple(String),
    #[error("invalid eleven-tuple: {0}")]
    BadElevenTuple(String),
    #[error("search deadline expired in {0}")]
    Timeout(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

// ---------------------------------------------------------------------
// The apex-wheel gadget.

/// Role assignment for the 9-vertex gadget inside a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetCorrespondence {
    pub y2: VertexId,
    pub a: [VertexId; 4],
    pub b: [VertexId; 4],
}

/// A 5-separation whose far side induces exactly the apex-wheel gadget.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApexWheelSeparation {
    pub separation: Separation,
    pub correspondence: GadgetCorrespondence,
}

/// The 16 gadget edges under a correspondence: the 8-cycle alternating
/// a- and b-vertices, the inner 4-cycle on the b's, and the apex edges.
fn gadget_edges(c: &GadgetCorrespondence) -> Vec<(VertexId, VertexId)> {
    let mut edges = Vec::with_capacity(16);
    for i in 0..4 {
        // 8-cycle: a_i b_i and b_i a_{i+1}.
        edges.push((c.a[i], c.b[i]));
        edges.push((c.b[i], c.a[(i + 1) % 4]));
        // 4-cycle.
        edges.push((c.b[i], c.b[(i + 1) % 4]));
        // Apex.
        edges.push((c.y2, c.b[i]));
    }
    let mut edges: Vec<(VertexId, VertexId)> =
        edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// The canonical 9-vertex, 16-edge gadget: a-vertices 0..4, b-vertices
/// 4..8, apex 8.
pub fn build_gadget() -> (Graph, GadgetCorrespondence) {
    let corr = GadgetCorrespondence {
        y2: 8,
        a: [0, 1, 2, 3],
        b: [4, 5, 6, 7],
    };
    let g = Graph::build(9, &gadget_edges(&corr)).expect("gadget is a valid graph");
    (g, corr)
}

/// Matches a 5-separation against the gadget: the far side must have
/// exactly nine vertices inducing exactly the 16 gadget edges under some
/// role assignment with the apex in the cut.
pub fn match_gadget_separation(
    g: &Graph,
    sep: &Separation,
) -> Result<Option<ApexWheelSeparation>, PipelineError> {
    if sep.order() != 5 {
        return Err(PipelineError::WrongSeparationOrder);
    }
    if sep.side2.len() != 9 {
        return Ok(None);
    }
    let interior: Vec<VertexId> = sep
        .side2
        .iter()
        .copied()
        .filter(|v| !sep.cut.contains(v))
        .collect();
    if interior.len() != 4 {
        return Ok(None);
    }
    let induced_edges: Vec<(VertexId, VertexId)> = {
        let set: std::collections::HashSet<_> = sep.side2.iter().copied().collect();
        g.edges()
            .into_iter()
            .filter(|&(u, v)| set.contains(&u) && set.contains(&v))
            .collect()
    };
    if induced_edges.len() != 16 {
        return Ok(None);
    }
    // Interior vertices are the b's; try every apex choice and role
    // permutation (this covers the dihedral automorphisms).
    for &y2 in &sep.cut {
        let rest: Vec<VertexId> = sep.cut.iter().copied().filter(|&v| v != y2).collect();
        for aperm in permutations4(&rest) {
            for bperm in permutations4(&interior) {
                let corr = GadgetCorrespondence { y2, a: aperm, b: bperm };
                let mut expect = gadget_edges(&corr);
                expect.sort_unstable();
                let mut got = induced_edges.clone();
                got.sort_unstable();
                if expect == got {
                    return Ok(Some(ApexWheelSeparation {
                        separation: sep.clone(),
                        correspondence: corr,
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn permutations4(items: &[VertexId]) -> Vec<[VertexId; 4]> {
    debug_assert_eq!(items.len(), 4);
    let mut out = Vec::with_capacity(24);
    let mut idx = [0, 1, 2, 3];
    loop {
        out.push([items[idx[0]], items[idx[1]], items[idx[2]], items[idx[3]]]);
        // Next lexicographic permutation.
        let mut i = 2i32;
        while i >= 0 && idx[i as usize] >= idx[i as usize + 1] {
            i -= 1;
        }
        if i < 0 {
            break;
        }
        let mut j = 3;
        while idx[j] <= idx[i as usize] {
            j -= 1;
        }
        idx.swap(i as usize, j);
        idx[i as usize + 1..].reverse();
    }
    out
}

/// Searches for an apex-wheel separation with the given apex: a 4-cycle
/// among the apex's neighbors, the alternating a-vertices, and the
/// induced-exactness and isolation checks.
pub fn find_gadget_separation(g: &Graph, y2: VertexId) -> Option<ApexWheelSeparation> {
    let nbrs = g.neighbors(y2);
    let m = nbrs.len();
    if g.n() < 10 {
        return None;
    }
    for i in 0..m {
        for j in 0..m {
            for k in 0..m {
                for l in 0..m {
                    let b = [nbrs[i], nbrs[j], nbrs[k], nbrs[l]];
                    let set: std::collections::HashSet<_> = b.iter().collect();
                    if set.len() != 4 {
                        continue;
                    }
                    // Inner 4-cycle must be present.
                    if !(g.has_edge(b[0], b[1])
                        && g.has_edge(b[1], b[2])
                        && g.has_edge(b[2], b[3])
                        && g.has_edge(b[3], b[0]))
                    {
                        continue;
                    }
                    // Each b must have degree exactly 5 (its whole
                    // neighborhood lies inside the gadget).
                    if b.iter().any(|&v| g.degree(v) != 5) {
                        continue;
                    }
                    // a_{i+1} is the remaining neighbor of both b_i and
                    // b_{i+1} on the 8-cycle; by incidence each b_i has
                    // exactly two a-neighbors.
                    let mut a = [usize::MAX; 4];
                    let mut ok = true;
                    for t in 0..4 {
                        // a[t] adjacent to b[t-1] and b[t].
                        let prev = b[(t + 3) % 4];
                        let cur = b[t];
                        let cands: Vec<VertexId> = g
                            .neighbors(cur)
                            .iter()
                            .copied()
                            .filter(|&w| {
                                w != y2
                                    && !b.contains(&w)
                                    && g.has_edge(prev, w)
                            })
                            .collect();
                        // The incidence forces a unique candidate when
                        // this really is the gadget.
                        match cands.first() {
                            Some(&w) => a[t] = w,
                            None => {
                                ok = false;
                                break;
                            }
                        }
                    }
                    if !ok {
                        continue;
                    }
                    let aset: std::collections::HashSet<_> = a.iter().collect();
                    if aset.len() != 4 || a.contains(&y2) {
                        continue;
                    }
                    let mut side2: Vec<VertexId> = vec![y2];
                    side2.extend_from_slice(&a);
                    side2.extend_from_slice(&b);
                    side2.sort_unstable();
                    side2.dedup();
                    if side2.len() != 9 {
                        continue;
                    }
                    let side1: Vec<VertexId> =
                        (0..g.n()).filter(|v| !b.contains(v)).collect();
                    let Ok(sep) = Separation::new(g, side1, side2) else {
                        continue;
                    };
                    if sep.order() != 5 {
                        continue;
                    }
                    if let Ok(Some(aws)) = match_gadget_separation(g, &sep) {
                        return Some(aws);
                    }
                }
            }
        }
    }
    None
}

// ---------------------------------------------------------------------
// Nine- and eleven-tuples.

/// The bundled hypotheses around the path X: the K4-minus roles, the
/// three designated neighbors of y2 with the outer two consecutive to
/// y2 on X, X induced (up to the K4-minus chords), and a 2-connected
/// remainder in the restricted graph.
#[derive(Clone, Debug)]
pub struct NineTuple {
    pub g: Graph,
    pub x: PathSeq,
    pub x1: VertexId,
    pub x2: VertexId,
    pub y1: VertexId,
    pub y2: VertexId,
    pub w1: VertexId,
    pub w2: VertexId,
    pub w3: VertexId,
}

impl NineTuple {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        g: &Graph,
        x: PathSeq,
        x1: VertexId,
        x2: VertexId,
        y1: VertexId,
        y2: VertexId,
        w1: VertexId,
        w2: VertexId,
        w3: VertexId,
    ) -> Result<NineTuple, PipelineError> {
        let t = NineTuple {
            g: g.clone(),
            x,
            x1,
            x2,
            y1,
            y2,
            w1,
            w2,
            w3,
        };
        t.validate()?;
        Ok(t)
    }

    pub fn g_prime(&self) -> Graph {
        restricted_graph(&self.g, self.y2, self.x1, self.x2, [self.w1, self.w2, self.w3])
    }

    fn validate(&self) -> Result<(), PipelineError> {
        let bad = |m: &str| Err(PipelineError::BadNineTuple(m.into()));
        let g = &self.g;
        let need = [
            (self.x1, self.x2),
            (self.x1, self.y1),
            (self.x1, self.y2),
            (self.x2, self.y1),
            (self.x2, self.y2),
        ];
        if need.iter().any(|&(a, b)| !g.has_edge(a, b)) || g.has_edge(self.y1, self.y2) {
            return bad("role quadruple is not the required K4-minus");
        }
        let ws = [self.w1, self.w2, self.w3];
        let wset: std::collections::HashSet<_> = ws.iter().collect();
        if wset.len() != 3 {
            return bad("w vertices repeat");
        }
        for &w in &ws {
            if w == self.x1 || w == self.x2 || !g.has_edge(w, self.y2) {
                return bad("w vertices must be neighbors of y2 away from x1, x2");
            }
        }
        if self.x.first() != self.x1 || self.x.last() != self.x2 {
            return bad("X does not run from x1 to x2");
        }
        if self.x.contains(self.y1) {
            return bad("y1 lies on X");
        }
        let p_y2 = match self.x.position(self.y2) {
            Some(p) => p,
            None => return bad("y2 does not lie on X"),
        };
        let xv = self.x.vertices();
        let before = if p_y2 > 0 { xv[p_y2 - 1] } else { usize::MAX };
        let after = if p_y2 + 1 < xv.len() { xv[p_y2 + 1] } else { usize::MAX };
        let pair_ok = (before == self.w1 && after == self.w3)
            || (before == self.w3 && after == self.w1);
        if !pair_ok {
            return bad("w1 y2 and w3 y2 are not the X-edges at y2");
        }
        if self.x.contains(self.w2) {
            return bad("w2 lies on X");
        }
        let gp = self.g_prime();
        let ignored = [
            (self.x1, self.x2),
            (self.x1, self.y2),
            (self.x2, self.y2),
        ];
        if !is_induced_path(&gp, &self.x, &ignored).unwrap_or(false) {
            return bad("X is not induced in the restricted graph");
        }
        let keep: Vec<VertexId> = (0..g.n()).filter(|v| !self.x.contains(*v)).collect();
        let (rest, _) = gp.induced(&keep);
        if !is_two_connected(&rest) {
            return bad("restricted graph minus X is not 2-connected");
        }
        Ok(())
    }
}

/// A nine-tuple plus interior vertices z1, z2 on the two y2-sides of X
/// and disjoint linkage paths Y (y1 to y2) and Z (z1 to z2) in the cut
/// graph H, with the X-span between z1 and z2 maximal.
#[derive(Clone, Debug)]
pub struct ElevenTuple {
    pub nine: NineTuple,
    pub z1: VertexId,
    pub z2: VertexId,
    pub y_path: PathSeq,
    pub z_path: PathSeq,
}

/// H: the restricted graph with X's interior removed and X's edges
/// erased, keeping y2, z1, z2 alive.
pub fn h_graph(nine: &NineTuple, z1: VertexId, z2: VertexId) -> Graph {
    let gp = nine.g_prime();
    let removed: Vec<VertexId> = nine
        .x
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != nine.y2 && v != z1 && v != z2)
        .collect();
    let x_edges = nine.x.edges();
    gp.without_vertices(&removed).without_edges(&x_edges)
}

impl ElevenTuple {
    pub fn validate(&self) -> Result<(), PipelineError> {
        let bad = |m: &str| Err(PipelineError::BadElevenTuple(m.into()));
        self.nine.validate()?;
        let x = &self.nine.x;
        let p_y2 = x.position(self.nine.y2).unwrap();
        let p1 = match x.position(self.z1) {
            Some(p) if p > 0 && p < p_y2 => p,
            _ => return bad("z1 is not interior to the x1-side of X"),
        };
        let p2 = match x.position(self.z2) {
            Some(p) if p > p_y2 && p < x.len() - 1 => p,
            _ => return bad("z2 is not interior to the x2-side of X"),
        };
        let _ = (p1, p2);
        let h = h_graph(&self.nine, self.z1, self.z2);
        let ok_paths = PathSeq::new(&h, self.y_path.vertices().to_vec()).is_ok()
            && PathSeq::new(&h, self.z_path.vertices().to_vec()).is_ok();
        if !ok_paths {
            return bad("stored linkage paths are not paths of H");
        }
        if self.y_path.first() != self.nine.y1 || self.y_path.last() != self.nine.y2 {
            return bad("Y does not run from y1 to y2");
        }
        if self.z_path.first() != self.z1 || self.z_path.last() != self.z2 {
            return bad("Z does not run from z1 to z2");
        }
        let yset: std::collections::HashSet<_> = self.y_path.vertices().iter().collect();
        if self.z_path.vertices().iter().any(|v| yset.contains(v)) {
            return bad("Y and Z intersect");
        }
        Ok(())
    }

    /// The number of X-vertices between z1 and z2 inclusive.
    pub fn span_len(&self) -> usize {
        let x = &self.nine.x;
        let p1 = x.position(self.z1).unwrap();
        let p2 = x.position(self.z2).unwrap();
        p2 - p1 + 1
    }
}

/// Scans all (z1, z2) pairs for a disjoint Y/Z linkage in H, keeping a
/// pair that maximizes the X-span between z1 and z2 (ties broken by
/// lexicographic (z1, z2)). `None` iff no pair admits the linkage.
pub fn find_eleven_tuple(
    nine: &NineTuple,
    deadline: Deadline,
) -> Result<Option<ElevenTuple>, PipelineError> {
    let x = &nine.x;
    let p_y2 = x.position(nine.y2).unwrap();
    let xv = x.vertices();
    let mut best: Option<ElevenTuple> = None;
    for p1 in 1..p_y2 {
        for p2 in (p_y2 + 1)..(xv.len() - 1) {
            if deadline.expired() {
                return Err(PipelineError::Timeout("eleven-tuple scan".into()));
            }
            let (z1, z2) = (xv[p1], xv[p2]);
            let h = h_graph(nine, z1, z2);
            let found = find_two_disjoint_paths(&h, nine.y1, nine.y2, z1, z2, deadline)
                .map_err(|_| PipelineError::Timeout("eleven-tuple linkage".into()))?;
            if let Some((yp, zp)) = found {
                let cand = ElevenTuple {
                    nine: nine.clone(),
                    z1,
                    z2,
                    y_path: yp,
                    z_path: zp,
                };
                let better = match &best {
                    None => true,
                    Some(b) => {
                        cand.span_len() > b.span_len()
                            || (cand.span_len() == b.span_len()
                                && (z1, z2) < (b.z1, b.z2))
                    }
                };
                if better {
                    best = Some(cand);
                }
            }
        }
    }
    if let Some(b) = &best {
        b.validate()?;
    }
    Ok(best)
}

/// Exhaustive re-check of the maximality condition: no pair with a
/// strictly longer X-span admits the linkage.
pub fn eleven_tuple_is_maximal(e: &ElevenTuple, deadline: Deadline) -> bool {
    let x = &e.nine.x;
    let p_y2 = x.position(e.nine.y2).unwrap();
    let xv = x.vertices();
    for p1 in 1..p_y2 {
        for p2 in (p_y2 + 1)..(xv.len() - 1) {
            if p2 - p1 < e.span_len() {
                continue;
            }
            let (z1, z2) = (xv[p1], xv[p2]);
            let h = h_graph(&e.nine, z1, z2);
            if let Ok(Some(_)) =
                find_two_disjoint_paths(&h, e.nine.y1, e.nine.y2, z1, z2, deadline)
            {
                return false;
            }
        }
    }
    true
}

// ---------------------------------------------------------------------
// A/B/C and P/Q searches.

/// Independent paths A, C (z_i to y1) and B (y2 to z_{3-i}) optimized by
/// the ladder: induced, then J(A,C) inside L(A,C) when possible, then
/// |J| maximal, then |L| maximal.
#[derive(Clone, Debug)]
pub struct AbcBundle {
    /// 1 when A, C start at z1; 2 when they start at z2.
    pub side: usize,
    pub a: PathSeq,
    pub b: PathSeq,
    pub c: PathSeq,
    pub j_bridge: BridgeRec,
    pub l_union: Vec<BridgeRec>,
}

#[derive(Clone, Debug)]
pub enum AbcOutcome {
    Found(AbcBundle),
    /// A path visiting z_i, z_{3-i}, y1, y2 in order: the caller turns
    /// it into a TK5 directly.
    FourInOrder { side: usize, path: PathSeq },
    /// No triple exists on either side: fall back to TK5 search.
    NoTriple,
}

fn zs_of(e: &ElevenTuple, side: usize) -> (VertexId, VertexId) {
    if side == 1 {
        (e.z1, e.z2)
    } else {
        (e.z2, e.z1)
    }
}

/// Enumerates induced path triples and applies the optimization ladder.
pub fn find_abc(e: &ElevenTuple, deadline: Deadline) -> Result<AbcOutcome, PipelineError> {
    let h = h_graph(&e.nine, e.z1, e.z2);
    // The lemma's escape hatch: a path through z_i, z_{3-i}, y1, y2 in
    // order yields a TK5 immediately.
    for side in [1usize, 2] {
        let (zi, zj) = zs_of(e, side);
        if let Some(p) =
            path_through_four(&h, zi, zj, e.nine.y1, e.nine.y2, deadline)?
        {
            return Ok(AbcOutcome::FourInOrder { side, path: p });
        }
    }
    for side in [1usize, 2] {
        let (zi, zj) = zs_of(e, side);
        let mut best: Option<(bool, usize, usize, AbcBundle)> = None;
        let a_paths = induced_paths_between(&h, zi, e.nine.y1, &[e.nine.y2, zj], deadline)?;
        for a in &a_paths {
            let a_interior: std::collections::HashSet<VertexId> =
                a.vertices()[1..a.len() - 1].iter().copied().collect();
            let c_paths = induced_paths_between(&h, zi, e.nine.y1, &[e.nine.y2, zj], deadline)?;
            for c in &c_paths {
                // A and C independent: shared vertices are exactly the
                // endpoints.
                if c.vertices()[1..c.len() - 1]
                    .iter()
                    .any(|v| a_interior.contains(v))
                    || a == c
                {
                    continue;
                }
                let blocked: Vec<VertexId> = a
                    .vertices()
                    .iter()
                    .chain(c.vertices().iter())
                    .copied()
                    .filter(|&v| v != zi && v != e.nine.y1)
                    .chain([zi, e.nine.y1])
                    .collect();
                let b_paths =
                    induced_paths_avoiding(&h, e.nine.y2, zj, &blocked, deadline)?;
                for b in &b_paths {
                    let bundle = score_abc(&h, e, side, a, b, c)?;
                    let key = (
                        bundle_j_in_l(&bundle),
                        bridge_size(&bundle.j_bridge),
                        bundle.l_union.iter().map(bridge_size).sum::<usize>(),
                    );
                    let better = match &best {
                        None => true,
                        Some((jl, js, ls, cur)) => {
                            let cand = (key.0, key.1, key.2);
                            let curk = (*jl, *js, *ls);
                            cand > curk
                                || (cand == curk
                                    && (bundle.a.vertices(), bundle.b.vertices(), bundle.c.vertices())
                                        < (cur.a.vertices(), cur.b.vertices(), cur.c.vertices()))
                        }
                    };
                    if better {
                        best = Some((key.0, key.1, key.2, bundle));
                    }
                }
            }
        }
        if let Some((_, _, _, bundle)) = best {
            return Ok(AbcOutcome::Found(bundle));
        }
    }
    Ok(AbcOutcome::NoTriple)
}

fn bundle_j_in_l(b: &AbcBundle) -> bool {
    b.l_union.iter().any(|t| t == &b.j_bridge)
}

fn bridge_size(b: &BridgeRec) -> usize {
    b.core.len() + b.attachments.len()
}

fn score_abc(
    h: &Graph,
    e: &ElevenTuple,
    side: usize,
    a: &PathSeq,
    b: &PathSeq,
    c: &PathSeq,
) -> Result<AbcBundle, PipelineError> {
    let (zi, _zj) = zs_of(e, side);
    let mut ac_verts: Vec<VertexId> = a.vertices().to_vec();
    ac_verts.extend_from_slice(c.vertices());
    let mut ac_edges = a.edges();
    ac_edges.extend(c.edges());
    let spec = SubgraphSpec::new(ac_verts, ac_edges);
    let bridges =
        enumerate_bridges(h, &spec).map_err(|e| PipelineError::Internal(e.to_string()))?;
    let j_bridge = bridges
        .iter()
        .find(|t| t.core.contains(&b.first()) || t.core.contains(&b.last()))
        .cloned()
        .ok_or_else(|| PipelineError::Internal("B lies in no (A u C)-bridge".into()))?;
    let a_interior: Vec<VertexId> = a
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != zi && v != e.nine.y1)
        .collect();
    let c_interior: Vec<VertexId> = c
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != zi && v != e.nine.y1)
        .collect();
    let l_union: Vec<BridgeRec> = bridges
        .into_iter()
        .filter(|t| {
            t.attachments.iter().any(|v| a_interior.contains(v))
                && t.attachments.iter().any(|v| c_interior.contains(v))
        })
        .collect();
    Ok(AbcBundle {
        side,
        a: a.clone(),
        b: b.clone(),
        c: c.clone(),
        j_bridge,
        l_union,
    })
}

/// All induced s-t paths avoiding `avoid` entirely.
fn induced_paths_between(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    avoid: &[VertexId],
    deadline: Deadline,
) -> Result<Vec<PathSeq>, PipelineError> {
    let mut out = Vec::new();
    let mut on = vec![false; g.n()];
    for &v in avoid {
        on[v] = true;
    }
    if on[s] || on[t] {
        return Ok(out);
    }
    on[s] = true;
    let mut path = vec![s];
    collect_induced(g, t, &mut on, &mut path, &mut out, deadline)?;
    Ok(out)
}

fn induced_paths_avoiding(
    g: &Graph,
    s: VertexId,
    t: VertexId,
    avoid: &[VertexId],
    deadline: Deadline,
) -> Result<Vec<PathSeq>, PipelineError> {
    let cleaned: Vec<VertexId> = avoid
        .iter()
        .copied()
        .filter(|&v| v != s && v != t)
        .collect();
    induced_paths_between(g, s, t, &cleaned, deadline)
}

fn collect_induced(
    g: &Graph,
    t: VertexId,
    on: &mut Vec<bool>,
    path: &mut Vec<VertexId>,
    out: &mut Vec<PathSeq>,
    deadline: Deadline,
) -> Result<(), PipelineError> {
    if deadline.expired() {
        return Err(PipelineError::Timeout("induced path enumeration".into()));
    }
    let head = *path.last().unwrap();
    if head == t {
        out.push(PathSeq::from_vec_unchecked(path.clone()));
        return Ok(());
    }
    for &w in g.neighbors(head) {
        if on[w] {
            continue;
        }
        // Induced: w may touch the path only at the head.
        if path[..path.len() - 1].iter().any(|&p| g.has_edge(p, w)) {
            continue;
        }
        on[w] = true;
        path.push(w);
        collect_induced(g, t, on, path, out, deadline)?;
        path.pop();
        on[w] = false;
    }
    Ok(())
}

/// A path visiting a, b, c, d in order (three internally disjoint
/// segments), if one exists.
fn path_through_four(
    g: &Graph,
    a: VertexId,
    b: VertexId,
    c: VertexId,
    d: VertexId,
    deadline: Deadline,
) -> Result<Option<PathSeq>, PipelineError> {
    // Segment 1: a -> b avoiding c, d; then disjoint b -> c and c -> d.
    let mut used = vec![false; g.n()];
    used[a] = true;
    let mut seg = vec![a];

    fn rec(
        g: &Graph,
        b: VertexId,
        c: VertexId,
        d: VertexId,
        used: &mut Vec<bool>,
        seg: &mut Vec<VertexId>,
        deadline: Deadline,
    ) -> Result<Option<Vec<VertexId>>, PipelineError> {
        if deadline.expired() {
            return Err(PipelineError::Timeout("four-in-order search".into()));
        }
        let head = *seg.last().unwrap();
        if head == b {
            // Middle segment b -> c avoiding d, then tail c -> d.
            let mut used2 = used.clone();
            let mut mid = vec![b];
            return rec2(g, c, d, &mut used2, &mut mid, seg, deadline);
        }
        for &w in g.neighbors(head) {
            if used[w] || w == c || w == d {
                continue;
            }
            used[w] = true;
            seg.push(w);
            if let Some(found) = rec(g, b, c, d, used, seg, deadline)? {
                return Ok(Some(found));
            }
            seg.pop();
            used[w] = false;
        }
        Ok(None)
    }

    fn rec2(
        g: &Graph,
        c: VertexId,
        d: VertexId,
        used: &mut Vec<bool>,
        mid: &mut Vec<VertexId>,
        seg1: &Vec<VertexId>,
        deadline: Deadline,
    ) -> Result<Option<Vec<VertexId>>, PipelineError> {
        if deadline.expired() {
            return Err(PipelineError::Timeout("four-in-order search".into()));
        }
        let head = *mid.last().unwrap();
        if head == c {
            let mut mask: Vec<bool> = used.iter().map(|&u| !u).collect();
            mask[c] = true;
            mask[d] = true;
            if let Some(tail) = g.shortest_path_masked(c, d, &mask) {
                let mut whole = seg1.clone();
                whole.extend_from_slice(&mid[1..]);
                whole.extend_from_slice(&tail[1..]);
                return Ok(Some(whole));
            }
            return Ok(None);
        }
        for &w in g.neighbors(head) {
            if used[w] || w == d {
                continue;
            }
            used[w] = true;
            mid.push(w);
            if let Some(found) = rec2(g, c, d, used, mid, seg1, deadline)? {
                return Ok(Some(found));
            }
            mid.pop();
            used[w] = false;
        }
        Ok(None)
    }

    let found = rec(g, b, c, d, &mut used, &mut seg, deadline)?;
    Ok(found.map(PathSeq::from_vec_unchecked))
}

/// The P/Q pair landing in C and A respectively, optimized per the
/// bundle step: q as close to z_{3-i} as possible, then p as close to
/// y2 as possible, then the landing segments minimal; plus the optional
/// path from y1 into Q.
#[derive(Clone, Debug)]
pub struct PqBundle {
    pub p: PathSeq,
    pub q: PathSeq,
    pub q_prime: Option<PathSeq>,
    /// B together with the B-bridges of H not containing A u C.
    pub b_prime: Vec<VertexId>,
    /// A u B' u C u P u Q.
    pub k_union: Vec<VertexId>,
}

#[derive(Clone, Debug)]
pub enum PqOutcome {
    Found(PqBundle),
    /// No pair with one end in A and one in C; fall back to TK5 search.
    Fallback(String),
}

pub fn find_pq(
    e: &ElevenTuple,
    abc: &AbcBundle,
    deadline: Deadline,
) -> Result<PqOutcome, PipelineError> {
    let h = h_graph(&e.nine, e.z1, e.z2);
    let (zi, zj) = zs_of(e, abc.side);
    let y1 = e.nine.y1;
    let bv = abc.b.vertices();
    // Free vertices: outside A u B u C.
    let mut in_abc = vec![false; h.n()];
    for &v in abc
        .a
        .vertices()
        .iter()
        .chain(abc.b.vertices())
        .chain(abc.c.vertices())
    {
        in_abc[v] = true;
    }
    let a_targets: Vec<VertexId> = abc
        .a
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != y1 && v != zi)
        .collect();
    let c_targets: Vec<VertexId> = abc
        .c
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != y1 && v != zi)
        .collect();
    // Enumerate (q_pos descending from z_{3-i}, p_pos ascending from
    // y2): q lands in A, p lands in C, per the bundle's orientation.
    let len = bv.len();
    for q_pos in (1..len - 1).rev() {
        for p_pos in 1..=q_pos {
            if deadline.expired() {
                return Err(PipelineError::Timeout("pq scan".into()));
            }
            if p_pos == q_pos {
                continue;
            }
            let (p_start, q_start) = (bv[p_pos], bv[q_pos]);
            // Landing spots: minimize |aAy1| + |cCz_i| per the ladder.
            let mut lands: Vec<(usize, VertexId, VertexId)> = Vec::new();
            for &cv in &c_targets {
                for &av in &a_targets {
                    let cost = seg_len(&abc.a, av, y1) + seg_len(&abc.c, cv, zi);
                    lands.push((cost, cv, av));
                }
            }
            lands.sort_unstable();
            for (_, cv, av) in lands {
                // Disjoint paths p_start -> cv and q_start -> av through
                // free vertices.
                let keep: Vec<VertexId> = (0..h.n())
                    .filter(|&v| !in_abc[v] || v == p_start || v == q_start || v == cv || v == av)
                    .collect();
                let (sub, ids) = h.induced(&keep);
                let loc = |v: VertexId| ids.iter().position(|&o| o == v).unwrap();
                match find_two_disjoint_paths(
                    &sub,
                    loc(p_start),
                    loc(cv),
                    loc(q_start),
                    loc(av),
                    deadline,
                ) {
                    Ok(Some((p_loc, q_loc))) => {
                        let lift = |p: &PathSeq| {
                            PathSeq::from_vec_unchecked(
                                p.vertices().iter().map(|&v| ids[v]).collect(),
                            )
                        };
                        let p = lift(&p_loc);
                        let q = lift(&q_loc);
                        // Lemma 4.3(ii) consequence check.
                        let x = &e.nine.x;
                        let xj = if abc.side == 1 { e.nine.x2 } else { e.nine.x1 };
                        let pos_zj = x.position(zj).unwrap();
                        let pos_xj = x.position(xj).unwrap();
                        if pos_zj.abs_diff(pos_xj) != 1 {
                            return Ok(PqOutcome::Fallback(
                                "z_{3-i} is not adjacent to x_{3-i} on X".into(),
                            ));
                        }
                        let bundle = build_pq_bundle(&h, e, abc, p, q)?;
                        return Ok(PqOutcome::Found(bundle));
                    }
                    Ok(None) => continue,
                    Err(_) => return Err(PipelineError::Timeout("pq linkage".into())),
                }
            }
        }
    }
    Ok(PqOutcome::Fallback("no disjoint pair lands in both A and C".into()))
}

fn seg_len(path: &PathSeq, from: VertexId, to: VertexId) -> usize {
    path.subpath(from, to).map(|p| p.len()).unwrap_or(usize::MAX)
}

fn build_pq_bundle(
    h: &Graph,
    e: &ElevenTuple,
    abc: &AbcBundle,
    p: PathSeq,
    q: PathSeq,
) -> Result<PqBundle, PipelineError> {
    // B' = B plus the B-bridges of H not containing A u C.
    let bspec = SubgraphSpec::new(abc.b.vertices().to_vec(), abc.b.edges());
    let bridges =
        enumerate_bridges(h, &bspec).map_err(|er| PipelineError::Internal(er.to_string()))?;
    let mut b_prime: Vec<VertexId> = abc.b.vertices().to_vec();
    for t in &bridges {
        if t.edges.is_empty() {
            // Isolated leftovers of vertex removal are not bridges.
            continue;
        }
        let holds_ac = t.core.contains(&abc.a.first())
            || t.core.contains(&abc.a.last())
            || t.core.iter().any(|v| abc.a.contains(*v) || abc.c.contains(*v));
        if !holds_ac && !t.core.is_empty() {
            b_prime.extend(t.core.iter().copied());
        }
    }
    b_prime.sort_unstable();
    b_prime.dedup();
    let mut k_union: Vec<VertexId> = b_prime.clone();
    for path in [&abc.a, &abc.c, &p, &q] {
        k_union.extend_from_slice(path.vertices());
    }
    k_union.sort_unstable();
    k_union.dedup();
    // Q': a path from y1 to the interior of Q (asymmetric end), kept
    // internally clear of K.
    let q_prime = {
        let a_end = q.last();
        let q_targets: Vec<VertexId> = q
            .vertices()
            .iter()
            .copied()
            .filter(|&v| v != a_end)
            .collect();
        let mut mask: Vec<bool> = (0..h.n()).map(|v| !k_union.contains(&v)).collect();
        let y1 = e.nine.y1;
        mask[y1] = true;
        let mut best: Option<Vec<VertexId>> = None;
        for &qt in &q_targets {
            let mut m = mask.clone();
            m[qt] = true;
            if let Some(path) = h.shortest_path_masked(y1, qt, &m) {
                if path.len() >= 2
                    && path[1..path.len() - 1].iter().all(|v| !k_union.contains(v))
                {
                    let better = best.as_ref().is_none_or(|b| path.len() < b.len());
                    if better {
                        best = Some(path);
                    }
                }
            }
        }
        best.map(PathSeq::from_vec_unchecked)
    };
    Ok(PqBundle {
        p,
        q,
        q_prime,
        b_prime,
        k_union,
    })
}

/// The assembled intermediate structure.
#[derive(Clone, Debug)]
pub struct StructureBundle {
    pub abc: AbcBundle,
    pub pq: PqBundle,
}

// ---------------------------------------------------------------------
// Theorem outcomes and the classifier.

#[derive(Clone, Debug)]
pub enum TheoremOutcome {
    /// A TK5 in the ambient graph with y2 not a branch vertex.
    Tk5NoY2Branch(TK5Certificate),
    /// A K4-minus away from y2.
    K4MinusCert(K4MinusCertificate),
    /// The apex-wheel 5-separation.
    Gadget(ApexWheelSeparation),
    /// A TK5 in the restricted graph.
    Tk5InGPrime(TK5Certificate),
}

#[derive(Clone, Debug)]
pub enum ClassifyResult {
    Outcome(TheoremOutcome),
    Timeout { stage: String },
}

/// Verifies a theorem outcome in the appropriate graph.
#[allow(clippy::too_many_arguments)]
pub fn verify_theorem_outcome(
    g: &Graph,
    x1: VertexId,
    x2: VertexId,
    y1: VertexId,
    y2: VertexId,
    ws: [VertexId; 3],
    out: &TheoremOutcome,
) -> bool {
    let _ = (x1, x2, y1);
    match out {
        TheoremOutcome::Tk5NoY2Branch(cert) => {
            verify_tk5(g, cert, &TK5Constraints::forbid_branch(&[y2]))
        }
        TheoremOutcome::K4MinusCert(cert) => cert.verify(g) && !cert.vertices.contains(&y2),
        TheoremOutcome::Gadget(aws) => {
            aws.correspondence.y2 == y2
                && match_gadget_separation(g, &aws.separation)
                    .ok()
                    .flatten()
                    .is_some()
        }
        TheoremOutcome::Tk5InGPrime(cert) => {
            let cons = TK5Constraints::restrict_vertex(y2, &[ws[0], ws[1], ws[2], x1, x2]);
            verify_tk5(g, cert, &cons)
        }
    }
}

/// The top-level classifier: verified preconditions, cheap scans, the
/// structural pipeline, then constrained TK5 searches, with the budget
/// split roughly 10/45/45 across the three phases.
#[allow(clippy::too_many_arguments)]
pub fn classify_theorem1(
    g: &Graph,
    x1: VertexId,
    x2: VertexId,
    y1: VertexId,
    y2: VertexId,
    w1: VertexId,
    w2: VertexId,
    w3: VertexId,
    budget: Deadline,
    mode: ExecMode,
) -> Result<ClassifyResult, NonsepError> {
    check_reduction_preconditions(g, x1, x2, y1, y2, w1, w2, w3)?;
    let ws = [w1, w2, w3];

    // Cheap certain outcomes first.
    if let Some(cert) = find_k4_minus(g, &[y2]) {
        let out = TheoremOutcome::K4MinusCert(cert);
        debug_assert!(verify_theorem_outcome(g, x1, x2, y1, y2, ws, &out));
        return Ok(ClassifyResult::Outcome(out));
    }
    if let Some(aws) = find_gadget_separation(g, y2) {
        return Ok(ClassifyResult::Outcome(TheoremOutcome::Gadget(aws)));
    }

    // Structural pipeline.
    let structural = budget.fraction(0.5);
    let mut deepest = String::from("reduction");
    let _ = &deepest;
    match reduction_step(g, x1, x2, y1, y2, w1, w2, w3, structural, mode) {
        Ok(Lemma32Outcome::K4MinusInGMinusY2(cert)) => {
            return Ok(ClassifyResult::Outcome(TheoremOutcome::K4MinusCert(cert)));
        }
        Ok(Lemma32Outcome::Gadget(aws)) => {
            return Ok(ClassifyResult::Outcome(TheoremOutcome::Gadget(aws)));
        }
        Ok(Lemma32Outcome::Tk5AvoidingY2(cert)) => {
            let out = TheoremOutcome::Tk5NoY2Branch(cert);
            debug_assert!(verify_theorem_outcome(g, x1, x2, y1, y2, ws, &out));
            return Ok(ClassifyResult::Outcome(out));
        }
        Ok(Lemma32Outcome::PathOrTk5(PathOrTk5::Tk5(cert))) => {
            // Prefer reporting the stronger outcome when y2 is not a
            // branch vertex of the found subdivision.
            let out = if !cert.uses_branch(y2)
                && verify_tk5(g, &cert, &TK5Constraints::forbid_branch(&[y2]))
            {
                TheoremOutcome::Tk5NoY2Branch(cert)
            } else {
                TheoremOutcome::Tk5InGPrime(cert)
            };
            debug_assert!(verify_theorem_outcome(g, x1, x2, y1, y2, ws, &out));
            return Ok(ClassifyResult::Outcome(out));
        }
        Ok(Lemma32Outcome::PathOrTk5(PathOrTk5::Path(xpath))) => {
            deepest = "nine-tuple".to_string();
            match tuple_stage(g, x1, x2, y1, y2, ws, &xpath, budget.fraction(0.6), &mut deepest)
            {
                Ok(Some(out)) => {
                    debug_assert!(verify_theorem_outcome(g, x1, x2, y1, y2, ws, &out));
                    return Ok(ClassifyResult::Outcome(out));
                }
                Ok(None) => {}
                Err(PipelineError::Timeout(s)) => deepest = s,
                Err(e) => return Err(NonsepError::Internal(e.to_string())),
            }
        }
        Err(NonsepError::Timeout(s)) => deepest = s,
        Err(e) => return Err(e),
    }

    // Final constrained searches.
    let half = budget.fraction(0.5);
    match find_tk5(g, &TK5Constraints::forbid_branch(&[y2]), half, mode) {
        SearchOutcome::Found(cert) => {
            let out = TheoremOutcome::Tk5NoY2Branch(cert);
            debug_assert!(verify_theorem_outcome(g, x1, x2, y1, y2, ws, &out));
            return Ok(ClassifyResult::Outcome(out));
        }
        SearchOutcome::Timeout => deepest = "tk5 search avoiding y2".into(),
        SearchOutcome::Absent => {}
    }
    let cons = TK5Constraints::restrict_vertex(y2, &[w1, w2, w3, x1, x2]);
    match find_tk5(g, &cons, budget, mode) {
        SearchOutcome::Found(cert) => {
            let out = TheoremOutcome::Tk5InGPrime(cert);
            debug_assert!(verify_theorem_outcome(g, x1, x2, y1, y2, ws, &out));
            Ok(ClassifyResult::Outcome(out))
        }
        SearchOutcome::Timeout => Ok(ClassifyResult::Timeout { stage: deepest }),
        SearchOutcome::Absent => {
            if budget.expired() {
                Ok(ClassifyResult::Timeout { stage: deepest })
            } else {
                Err(NonsepError::Internal(
                    "no outcome found by exhaustive search".into(),
                ))
            }
        }
    }
}

/// The nine-tuple / eleven-tuple / ABC / PQ stage, surfacing a TK5 from
/// the assembly templates when the structure admits one.
#[allow(clippy::too_many_arguments)]
fn tuple_stage(
    g: &Graph,
    x1: VertexId,
    x2: VertexId,
    y1: VertexId,
    y2: VertexId,
    ws: [VertexId; 3],
    iv_path: &PathSeq,
    deadline: Deadline,
    deepest: &mut String,
) -> Result<Option<TheoremOutcome>, PipelineError> {
    // Order the designated neighbors along the path and splice y2 in
    // place of the middle stretch.
    let mut order: Vec<VertexId> = ws.to_vec();
    order.sort_by_key(|&w| iv_path.position(w).unwrap());
    let (wa, wb, wc) = (order[0], order[1], order[2]);
    let head = iv_path.subpath(x1, wa).unwrap();
    let tail = iv_path.subpath(wc, x2).unwrap();
    let mut x9: Vec<VertexId> = head.vertices().to_vec();
    x9.push(y2);
    x9.extend_from_slice(tail.vertices());
    let x9 = match PathSeq::new(g, x9) {
        Ok(p) => p,
        Err(_) => return Ok(None),
    };
    let nine = match NineTuple::new(g, x9, x1, x2, y1, y2, wa, wb, wc) {
        Ok(n) => n,
        Err(_) => return Ok(None),
    };
    *deepest = "eleven-tuple".into();
    let Some(eleven) = find_eleven_tuple(&nine, deadline)? else {
        return Ok(None);
    };
    *deepest = "abc".into();
    match find_abc(&eleven, deadline)? {
        AbcOutcome::FourInOrder { side, path } => {
            if let Some(out) = four_in_order_tk5(&eleven, side, &path) {
                return Ok(Some(out));
            }
            Ok(None)
        }
        AbcOutcome::NoTriple => Ok(None),
        AbcOutcome::Found(abc) => {
            *deepest = "pq".into();
            match find_pq(&eleven, &abc, deadline)? {
                PqOutcome::Fallback(_) => Ok(None),
                PqOutcome::Found(pq) => {
                    *deepest = "assembly templates".into();
                    let bundle = StructureBundle { abc, pq };
                    Ok(apply_templates(&eleven, &bundle, deadline))
                }
            }
        }
    }
}

/// TK5 from a path visiting z_i, z_{3-i}, y1, y2 in order: branch
/// vertices x1, x2, y1, y2, z_{3-i}.
fn four_in_order_tk5(
    e: &ElevenTuple,
    side: usize,
    p: &PathSeq,
) -> Option<TheoremOutcome> {
    let nine = &e.nine;
    let (zi, zj) = zs_of(e, side);
    let (xi, xj) = if side == 1 {
        (nine.x1, nine.x2)
    } else {
        (nine.x2, nine.x1)
    };
    let x = &nine.x;
    let gp = nine.g_prime();
    let mut w = WiringBuilder::new([nine.x1, nine.x2, nine.y1, nine.y2, zj]);
    w.arc(zj, xj, vec![x.subpath(zj, xj).ok()?]);
    w.arc(zj, nine.y2, vec![x.subpath(zj, nine.y2).ok()?]);
    w.arc(
        zj,
        xi,
        vec![p.subpath(zj, zi).ok()?, x.subpath(zi, xi).ok()?],
    );
    w.arc(zj, nine.y1, vec![p.subpath(zj, nine.y1).ok()?]);
    w.arc(nine.y1, nine.y2, vec![p.subpath(nine.y1, nine.y2).ok()?]);
    w.arc(nine.x1, nine.x2, vec![PathSeq::from_vec_unchecked(vec![nine.x1, nine.x2])]);
    w.arc(nine.x1, nine.y1, vec![PathSeq::from_vec_unchecked(vec![nine.x1, nine.y1])]);
    w.arc(nine.x1, nine.y2, vec![PathSeq::from_vec_unchecked(vec![nine.x1, nine.y2])]);
    w.arc(nine.x2, nine.y1, vec![PathSeq::from_vec_unchecked(vec![nine.x2, nine.y1])]);
    w.arc(nine.x2, nine.y2, vec![PathSeq::from_vec_unchecked(vec![nine.x2, nine.y2])]);
    w.assemble(&gp).ok().map(TheoremOutcome::Tk5InGPrime)
}

/// The assembly templates culminating the structure analysis: each is
/// tried when its auxiliary paths exist, and the first fully assembled
/// subdivision wins. When none applies the caller falls back to the
/// exhaustive constrained search.
fn apply_templates(
    e: &ElevenTuple,
    bundle: &StructureBundle,
    deadline: Deadline,
) -> Option<TheoremOutcome> {
    let nine = &e.nine;
    let h = h_graph(nine, e.z1, e.z2);
    let gp = nine.g_prime();
    let abc = &bundle.abc;
    let pq = &bundle.pq;
    let (zi, zj) = zs_of(e, abc.side);
    let (xi, xj) = if abc.side == 1 {
        (nine.x1, nine.x2)
    } else {
        (nine.x2, nine.x1)
    };
    let x = &nine.x;
    let y1 = nine.y1;
    let y2 = nine.y2;
    let (p_path, q_path) = (&pq.p, &pq.q);
    let p_on_b = p_path.first();
    let q_on_b = q_path.first();
    let c_land = p_path.last();

    if deadline.expired() {
        return None;
    }
    // The template needs the path from y1 into Q.
    let qp = pq.q_prime.as_ref()?;
    let q_prime_end = qp.last();
    // Legs inside B' - y2 from z_{3-i} to q and to p.
    let (p1, p2) = bprime_legs(&h, pq, zj, y2, q_on_b, p_on_b)?;
    // Auxiliary path from the x_i-side of X into C, internally clear of
    // the structure.
    let mut banned: Vec<VertexId> = pq.k_union.clone();
    banned.extend_from_slice(qp.vertices());
    banned.extend_from_slice(x.vertices());
    banned.sort_unstable();
    banned.dedup();
    let from_set: Vec<VertexId> = x
        .subpath(xi, zi)
        .ok()?
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != zi)
        .collect();
    let to_set: Vec<VertexId> = abc
        .c
        .vertices()
        .iter()
        .copied()
        .filter(|&v| v != y1 && v != zi)
        .collect();
    let s_path = aux_path(&gp, &banned, &from_set, &to_set)?;
    let s_on_x = s_path.first();
    let s_on_c = s_path.last();
    // Branch vertices x1, x2, y1, y2, z_{3-i}; C is entered once by P
    // and left once toward the auxiliary path, A carries y1 to the
    // z_i-side of X.
    let build = || -> Option<TK5Certificate> {
        let mut w = WiringBuilder::new([nine.x1, nine.x2, y1, y2, zj]);
        w.arc(zj, xj, vec![x.subpath(zj, xj).ok()?]);
        w.arc(zj, y2, vec![x.subpath(zj, y2).ok()?]);
        w.arc(
            zj,
            y1,
            vec![
                p1.clone(),
                q_path.subpath(q_on_b, q_prime_end).ok()?,
                qp.reversed(),
            ],
        );
        w.arc(
            zj,
            xi,
            vec![
                p2.clone(),
                p_path.clone(),
                abc.c.subpath(c_land, s_on_c).ok()?,
                s_path.reversed(),
                x.subpath(s_on_x, xi).ok()?,
            ],
        );
        w.arc(
            y1,
            y2,
            vec![abc.a.subpath(y1, zi).ok()?, x.subpath(zi, y2).ok()?],
        );
        w.arc(nine.x1, nine.x2, vec![PathSeq::from_vec_unchecked(vec![nine.x1, nine.x2])]);
        w.arc(nine.x1, y1, vec![PathSeq::from_vec_unchecked(vec![nine.x1, y1])]);
        w.arc(nine.x1, y2, vec![PathSeq::from_vec_unchecked(vec![nine.x1, y2])]);
        w.arc(nine.x2, y1, vec![PathSeq::from_vec_unchecked(vec![nine.x2, y1])]);
        w.arc(nine.x2, y2, vec![PathSeq::from_vec_unchecked(vec![nine.x2, y2])]);
        w.assemble(&gp).ok()
    };
    build().map(TheoremOutcome::Tk5InGPrime)
}

/// Independent paths in B' - y2 from the far z into the two B-landing
/// vertices of P and Q.
fn bprime_legs(
    h: &Graph,
    pq: &PqBundle,
    zj: VertexId,
    y2: VertexId,
    q_on_b: VertexId,
    p_on_b: VertexId,
) -> Option<(PathSeq, PathSeq)> {
    let keep: Vec<VertexId> = pq.b_prime.iter().copied().filter(|&v| v != y2).collect();
    let (sub, ids) = h.induced(&keep);
    let loc = |v: VertexId| ids.iter().position(|&o| o == v);
    let (lz, lq, lp) = (loc(zj)?, loc(q_on_b)?, loc(p_on_b)?);
    let fan = crate::connectivity::independent_fan(&sub, lz, &[lq, lp], 2)
        .ok()
        .flatten()?;
    let lift = |p: &PathSeq| {
        PathSeq::from_vec_unchecked(p.vertices().iter().map(|&v| ids[v]).collect())
    };
    let to_q = fan.paths.iter().find(|p| ids[p.last()] == q_on_b)?;
    let to_p = fan.paths.iter().find(|p| ids[p.last()] == p_on_b)?;
    Some((lift(to_q), lift(to_p)))
}

/// Shortest path from `froms` to `tos` whose interior avoids `banned`
/// entirely; endpoints are taken from the given sets.
fn aux_path(
    g: &Graph,
    banned: &[VertexId],
    froms: &[VertexId],
    tos: &[VertexId],
) -> Option<PathSeq> {
    let banned_set: std::collections::HashSet<VertexId> = banned.iter().copied().collect();
    let mut best: Option<Vec<VertexId>> = None;
    for &s in froms {
        for &t in tos {
            if s == t {
                continue;
            }
            let mut mask: Vec<bool> = (0..g.n()).map(|v| !banned_set.contains(&v)).collect();
            mask[s] = true;
            mask[t] = true;
            if let Some(path) = g.shortest_path_masked(s, t, &mask) {
                let better = best.as_ref().is_none_or(|b| path.len() < b.len());
                if better {
                    best = Some(path);
                }
            }
        }
    }
    best.map(PathSeq::from_vec_unchecked)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn gadget_census() {
        let (g, corr) = build_gadget();
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 16);
        let mut degs: Vec<usize> = (0..9).map(|v| g.degree(v)).collect();
        degs.sort_unstable();
        assert_eq!(degs, vec![2, 2, 2, 2, 4, 5, 5, 5, 5]);
        assert_eq!(g.degree(corr.y2), 4);
        for &a in &corr.a {
            assert_eq!(g.degree(a), 2);
        }
        for &b in &corr.b {
            assert_eq!(g.degree(b), 5);
        }
    }

    #[test]
    fn gadget_minus_apex_is_disc_embeddable_on_a_vertices() {
        let (g, corr) = build_gadget();
        let keep: Vec<VertexId> = (0..9).filter(|&v| v != corr.y2).collect();
        let (sub, ids) = g.induced(&keep);
        let a_local: Vec<VertexId> = corr
            .a
            .iter()
            .map(|&a| ids.iter().position(|&o| o == a).unwrap())
            .collect();
        let quad = [a_local[0], a_local[1], a_local[2], a_local[3]];
        let found = crate::planarity::cyclic_orders_of_four(&quad)
            .iter()
            .any(|ord| {
                crate::planarity::test_disc_embeddable(&sub, ord)
                    .unwrap()
                    .is_some()
            });
        assert!(found);
    }

    /// Gadget glued to a K7 host along the cut (apex plus a-vertices).
    pub(crate) fn glued_host() -> (Graph, GadgetCorrespondence) {
        let (gadget, corr) = build_gadget();
        // Host vertices 9..13 are fresh; cut = {y2=8, a=0,1,2,3}.
        let mut edges = gadget.edges();
        let host: Vec<VertexId> = vec![8, 0, 1, 2, 3, 9, 10, 11, 12, 13];
        for i in 0..host.len() {
            for j in (i + 1)..host.len() {
                let (u, v) = (host[i], host[j]);
                // The gadget side must stay induced-exact: no new edges
                // among {8, 0..3}.
                if u <= 8 && v <= 8 {
                    continue;
                }
                edges.push((u, v));
            }
        }
        let g = build_graph(14, &edges).unwrap();
        (g, corr)
    }

    #[test]
    fn gadget_separation_matched_on_glued_host() {
        let (g, corr) = glued_host();
        let side2: Vec<VertexId> = (0..9).collect();
        let side1: Vec<VertexId> = (0..14).filter(|&v| !(4..8).contains(&v)).collect();
        let sep = Separation::new(&g, side1, side2).unwrap();
        assert_eq!(sep.order(), 5);
        let aws = match_gadget_separation(&g, &sep).unwrap().unwrap();
        assert_eq!(aws.correspondence.y2, corr.y2);

        let found = find_gadget_separation(&g, 8).unwrap();
        assert_eq!(found.correspondence.y2, 8);
    }

    #[test]
    fn gadget_rejects_wrong_side_sizes() {
        let k6 = Graph::complete(6);
        // No valid order-5 separation of K6 exists; matching a wrong
        // order errors.
        let side1: Vec<VertexId> = (0..6).collect();
        let side2: Vec<VertexId> = (1..6).collect();
        assert!(Separation::new(&k6, side1, side2).is_err());
    }

    #[test]
    fn gadget_not_matched_on_wheel() {
        // A wheel W8 on 9 vertices glued the same way must not match.
        let mut edges = Vec::new();
        for i in 0..8 {
            edges.push((i, (i + 1) % 8));
            edges.push((8, i));
        }
        // Host clique on {8, 0, 1, 2, 3} u {9..13} minus the side2 part.
        let host: Vec<VertexId> = vec![8, 0, 1, 2, 3, 9, 10, 11, 12, 13];
        for i in 0..host.len() {
            for j in (i + 1)..host.len() {
                let (u, v) = (host[i], host[j]);
                if u <= 8 && v <= 8 {
                    continue;
                }
                edges.push((u, v));
            }
        }
        let g = build_graph(14, &edges).unwrap();
        let side2: Vec<VertexId> = (0..9).collect();
        let side1: Vec<VertexId> = (0..14).filter(|&v| !(4..8).contains(&v)).collect();
        if let Ok(sep) = Separation::new(&g, side1, side2) {
            if sep.order() == 5 {
                assert!(match_gadget_separation(&g, &sep).unwrap().is_none());
            }
        }
    }

    #[test]
    fn permutations_cover_all_24() {
        let p = permutations4(&[0, 1, 2, 3]);
        assert_eq!(p.len(), 24);
        let set: std::collections::HashSet<_> = p.iter().collect();
        assert_eq!(set.len(), 24);
    }
}
