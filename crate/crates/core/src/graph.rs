//! Immutable simple graphs with dense vertex ids, plus the path/cycle
//! algebra and separations everything else is built on.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense vertex id in `[0, n)` for the owning graph.
pub type VertexId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range (n = {1})")]
    VertexOutOfRange(VertexId, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("contraction set is empty")]
    EmptyContraction,
    #[error("contraction set is not connected")]
    DisconnectedContraction,
    #[error("vertex sequence is not a valid path: {0}")]
    InvalidPath(String),
    #[error("vertex sequence is not a valid cycle: {0}")]
    InvalidCycle(String),
    #[error("vertex {0} does not lie on the path or cycle")]
    NotOnPath(VertexId),
    #[error("invalid separation: {0}")]
    InvalidSeparation(String),
    #[error("not a subgraph: {0}")]
    NotSubgraph(String),
}

/// Immutable simple undirected graph. Adjacency lists are sorted
/// ascending, so every deterministic search below iterates neighbors in
/// a fixed order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<VertexId>>,
    labels: Option<Vec<String>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged;
    /// out-of-range ids and self-loops are errors.
    pub fn build(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { n, adj, labels: None })
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u, v));
            }
        }
        Graph::build(n, &edges).expect("complete graph is always valid")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::build(n, &edges).expect("cycle graph is always valid")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn label(&self, v: VertexId) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.n && v < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Neighborhood of a vertex set, excluding the set itself.
    pub fn neighborhood_of_set(&self, set: &[VertexId]) -> Vec<VertexId> {
        let mut inside = vec![false; self.n];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for &v in set {
            for &w in &self.adj[v] {
                if !inside[w] && !seen[w] {
                    seen[w] = true;
                    out.push(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Connected components, each sorted; components ordered by their
    /// smallest vertex. `mask[v] = false` vertices are ignored.
    pub fn components_masked(&self, mask: &[bool]) -> Vec<Vec<VertexId>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for start in 0..self.n {
            if !mask[start] || seen[start] {
                continue;
            }
            let mut comp = vec![start];
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(v) = stack.pop() {
                for &w in &self.adj[v] {
                    if mask[w] && !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn components(&self) -> Vec<Vec<VertexId>> {
        self.components_masked(&vec![true; self.n])
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components().len() == 1
    }

    /// Whether `set` induces a connected subgraph.
    pub fn is_connected_set(&self, set: &[VertexId]) -> bool {
        if set.is_empty() {
            return false;
        }
        let mut mask = vec![false; self.n];
        for &v in set {
            mask[v] = true;
        }
        let comps = self.components_masked(&mask);
        comps.len() == 1 && comps[0].len() == set.len()
    }

    /// Induced subgraph on `keep` (sorted, deduplicated internally).
    /// Returns the subgraph and the old-id list indexed by new id.
    pub fn induced(&self, keep: &[VertexId]) -> (Graph, Vec<VertexId>) {
        let mut old_ids: Vec<VertexId> = keep.to_vec();
        old_ids.sort_unstable();
        old_ids.dedup();
        let mut new_of = vec![usize::MAX; self.n];
        for (i, &v) in old_ids.iter().enumerate() {
            new_of[v] = i;
        }
        let mut edges = Vec::new();
        for (i, &v) in old_ids.iter().enumerate() {
            for &w in &self.adj[v] {
                if new_of[w] != usize::MAX && new_of[w] > i {
                    edges.push((i, new_of[w]));
                }
            }
        }
        let g = Graph::build(old_ids.len(), &edges).expect("induced subgraph is valid");
        (g, old_ids)
    }

    /// Same-n copy with the listed vertices stripped of all incidences.
    pub fn without_vertices(&self, remove: &[VertexId]) -> Graph {
        let mut gone = vec![false; self.n];
        for &v in remove {
            gone[v] = true;
        }
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|&(u, v)| !gone[u] && !gone[v])
            .collect();
        Graph::build(self.n, &edges).expect("vertex removal preserves validity")
    }

    /// Same-n copy without the listed edges.
    pub fn without_edges(&self, remove: &[(VertexId, VertexId)]) -> Graph {
        let gone: std::collections::HashSet<(usize, usize)> = remove
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        let edges: Vec<_> = self
            .edges()
            .into_iter()
            .filter(|e| !gone.contains(e))
            .collect();
        Graph::build(self.n, &edges).expect("edge removal preserves validity")
    }

    pub fn with_extra_edges(&self, extra: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
        let mut edges = self.edges();
        edges.extend_from_slice(extra);
        let mut g = Graph::build(self.n, &edges)?;
        g.labels = self.labels.clone();
        Ok(g)
    }

    /// Breadth-first shortest path between two vertices under a vertex
    /// mask, scanning neighbors in ascending order. `None` if
    /// unreachable. Both endpoints must be alive in the mask.
    pub fn shortest_path_masked(
        &self,
        from: VertexId,
        to: VertexId,
        mask: &[bool],
    ) -> Option<Vec<VertexId>> {
        if !mask[from] || !mask[to] {
            return None;
        }
        if from == to {
            return Some(vec![from]);
        }
        let mut prev = vec![usize::MAX; self.n];
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(from);
        prev[from] = from;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if mask[w] && prev[w] == usize::MAX {
                    prev[w] = v;
                    if w == to {
                        let mut path = vec![to];
                        let mut cur = to;
                        while cur != from {
                            cur = prev[cur];
                            path.push(cur);
                        }
                        path.reverse();
                        return Some(path);
                    }
                    queue.push_back(w);
                }
            }
        }
        None
    }
}

/// Builds a graph from an edge list; see [`Graph::build`].
pub fn build_graph(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Graph, GraphError> {
    Graph::build(n, edges)
}

/// Contracts a connected vertex set to a single vertex, merging parallel
/// edges. Ids are relabeled to stay dense; the returned vector maps every
/// old id to its new id (total on old ids), with the contracted set
/// mapping to the image of its minimum element.
pub fn contract_subgraph(
    g: &Graph,
    m: &[VertexId],
) -> Result<(Graph, Vec<VertexId>), GraphError> {
    if m.is_empty() {
        return Err(GraphError::EmptyContraction);
    }
    for &v in m {
        if v >= g.n() {
            return Err(GraphError::VertexOutOfRange(v, g.n()));
        }
    }
    if !g.is_connected_set(m) {
        return Err(GraphError::DisconnectedContraction);
    }
    let mut in_m = vec![false; g.n()];
    for &v in m {
        in_m[v] = true;
    }
    let rep = *m.iter().min().unwrap();
    // Rank surviving vertices (non-members plus the representative).
    let mut mapping = vec![usize::MAX; g.n()];
    let mut next = 0;
    for v in 0..g.n() {
        if !in_m[v] || v == rep {
            mapping[v] = next;
            next += 1;
        }
    }
    for v in 0..g.n() {
        if in_m[v] {
            mapping[v] = mapping[rep];
        }
    }
    let edges: Vec<_> = g
        .edges()
        .into_iter()
        .filter_map(|(u, v)| {
            let (a, b) = (mapping[u], mapping[v]);
            if a == b {
                None
            } else {
                Some((a, b))
            }
        })
        .collect();
    let contracted = Graph::build(next, &edges)?;
    Ok((contracted, mapping))
}

/// Ordered vertex sequence forming a path; a single vertex is the
/// trivial path.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PathSeq {
    verts: Vec<VertexId>,
}

impl std::fmt::Debug for PathSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Path{:?}", self.verts)
    }
}

impl PathSeq {
    /// Validates distinctness and consecutive adjacency in `g`.
    pub fn new(g: &Graph, verts: Vec<VertexId>) -> Result<PathSeq, GraphError> {
        if verts.is_empty() {
            return Err(GraphError::InvalidPath("empty sequence".into()));
        }
        let mut seen = std::collections::HashSet::new();
        for &v in &verts {
            if v >= g.n() {
                return Err(GraphError::VertexOutOfRange(v, g.n()));
            }
            if !seen.insert(v) {
                return Err(GraphError::InvalidPath(format!("repeated vertex {v}")));
            }
        }
        for w in verts.windows(2) {
            if !g.has_edge(w[0], w[1]) {
                return Err(GraphError::InvalidPath(format!(
                    "missing edge {}-{}",
                    w[0], w[1]
                )));
            }
        }
        Ok(PathSeq { verts })
    }

    pub fn trivial(v: VertexId) -> PathSeq {
        PathSeq { verts: vec![v] }
    }

    /// Constructs without adjacency checks; for callers that have
    /// already established validity against the owning graph.
    pub fn from_vec_unchecked(verts: Vec<VertexId>) -> PathSeq {
        debug_assert!(!verts.is_empty());
        PathSeq { verts }
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn first(&self) -> VertexId {
        self.verts[0]
    }

    pub fn last(&self) -> VertexId {
        *self.verts.last().unwrap()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.verts.contains(&v)
    }

    pub fn position(&self, v: VertexId) -> Option<usize> {
        self.verts.iter().position(|&x| x == v)
    }

    pub fn interior(&self) -> &[VertexId] {
        if self.verts.len() <= 2 {
            &[]
        } else {
            &self.verts[1..self.verts.len() - 1]
        }
    }

    pub fn reversed(&self) -> PathSeq {
        let mut verts = self.verts.clone();
        verts.reverse();
        PathSeq { verts }
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.verts
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect()
    }

    /// Segment between `x` and `y`, traversed from `x` to `y`. For
    /// `x = y` this is the trivial path.
    pub fn subpath(&self, x: VertexId, y: VertexId) -> Result<PathSeq, GraphError> {
        let i = self.position(x).ok_or(GraphError::NotOnPath(x))?;
        let j = self.position(y).ok_or(GraphError::NotOnPath(y))?;
        let verts = if i <= j {
            self.verts[i..=j].to_vec()
        } else {
            let mut v = self.verts[j..=i].to_vec();
            v.reverse();
            v
        };
        Ok(PathSeq { verts })
    }
}

/// Ordered vertex sequence forming a cycle; the closing edge is implicit
/// and the stored order is the fixed clockwise orientation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CycleSeq {
    verts: Vec<VertexId>,
}

impl std::fmt::Debug for CycleSeq {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Cycle{:?}", self.verts)
    }
}

impl CycleSeq {
    pub fn new(g: &Graph, verts: Vec<VertexId>) -> Result<CycleSeq, GraphError> {
        if verts.len() < 3 {
            return Err(GraphError::InvalidCycle("fewer than 3 vertices".into()));
        }
        let path = PathSeq::new(g, verts).map_err(|e| GraphError::InvalidCycle(e.to_string()))?;
        let verts = path.verts;
        if !g.has_edge(*verts.last().unwrap(), verts[0]) {
            return Err(GraphError::InvalidCycle(format!(
                "missing closing edge {}-{}",
                verts.last().unwrap(),
                verts[0]
            )));
        }
        Ok(CycleSeq { verts })
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.verts
    }

    pub fn len(&self) -> usize {
        self.verts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.verts.contains(&v)
    }

    pub fn edges(&self) -> Vec<(VertexId, VertexId)> {
        let mut out: Vec<_> = self
            .verts
            .windows(2)
            .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
            .collect();
        let (a, b) = (*self.verts.last().unwrap(), self.verts[0]);
        out.push((a.min(b), a.max(b)));
        out
    }

    /// Clockwise segment from `x` to `y`; clockwise means increasing
    /// stored position, wrapping around. `x = y` yields the trivial path.
    pub fn subpath(&self, x: VertexId, y: VertexId) -> Result<PathSeq, GraphError> {
        let i = self
            .verts
            .iter()
            .position(|&v| v == x)
            .ok_or(GraphError::NotOnPath(x))?;
        let j = self
            .verts
            .iter()
            .position(|&v| v == y)
            .ok_or(GraphError::NotOnPath(y))?;
        if i == j {
            return Ok(PathSeq::trivial(x));
        }
        let mut verts = Vec::new();
        let mut k = i;
        loop {
            verts.push(self.verts[k]);
            if k == j {
                break;
            }
            k = (k + 1) % self.verts.len();
        }
        Ok(PathSeq { verts })
    }
}

/// Either flavor of vertex sequence, for operations defined on both.
pub enum Walk<'a> {
    Path(&'a PathSeq),
    Cycle(&'a CycleSeq),
}

/// Subpath on a path or cycle, honoring the cycle's stored orientation.
pub fn subpath(w: Walk<'_>, x: VertexId, y: VertexId) -> Result<PathSeq, GraphError> {
    match w {
        Walk::Path(p) => p.subpath(x, y),
        Walk::Cycle(c) => c.subpath(x, y),
    }
}

/// True iff no edge of `g` outside the path and outside `ignored_edges`
/// joins two non-consecutive path vertices.
pub fn is_induced_path(
    g: &Graph,
    p: &PathSeq,
    ignored_edges: &[(VertexId, VertexId)],
) -> Result<bool, GraphError> {
    // Revalidate p against g: the path may come from another context.
    PathSeq::new(g, p.vertices().to_vec())?;
    let ignored: std::collections::HashSet<(usize, usize)> = ignored_edges
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    let verts = p.vertices();
    for i in 0..verts.len() {
        for j in (i + 2)..verts.len() {
            let (a, b) = (verts[i].min(verts[j]), verts[i].max(verts[j]));
            if g.has_edge(a, b) && !ignored.contains(&(a, b)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A separation `(side1, side2)` of order `|cut|`; no edge joins
/// `side1 - cut` to `side2 - cut` and both proper sides are nonempty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Separation {
    pub side1: Vec<VertexId>,
    pub side2: Vec<VertexId>,
    pub cut: Vec<VertexId>,
}

impl Separation {
    pub fn new(
        g: &Graph,
        mut side1: Vec<VertexId>,
        mut side2: Vec<VertexId>,
    ) -> Result<Separation, GraphError> {
        side1.sort_unstable();
        side1.dedup();
        side2.sort_unstable();
        side2.dedup();
        for &v in side1.iter().chain(side2.iter()) {
            if v >= g.n() {
                return Err(GraphError::VertexOutOfRange(v, g.n()));
            }
        }
        let mut in1 = vec![false; g.n()];
        let mut in2 = vec![false; g.n()];
        for &v in &side1 {
            in1[v] = true;
        }
        for &v in &side2 {
            in2[v] = true;
        }
        for v in 0..g.n() {
            if !in1[v] && !in2[v] {
                return Err(GraphError::InvalidSeparation(format!(
                    "vertex {v} on neither side"
                )));
            }
        }
        let cut: Vec<_> = side1.iter().copied().filter(|&v| in2[v]).collect();
        if side1.len() == cut.len() || side2.len() == cut.len() {
            return Err(GraphError::InvalidSeparation(
                "a proper side is empty".into(),
            ));
        }
        for (u, v) in g.edges() {
            let u_strict1 = in1[u] && !in2[u];
            let v_strict1 = in1[v] && !in2[v];
            let u_strict2 = in2[u] && !in1[u];
            let v_strict2 = in2[v] && !in1[v];
            if (u_strict1 && v_strict2) || (u_strict2 && v_strict1) {
                return Err(GraphError::InvalidSeparation(format!(
                    "edge {u}-{v} crosses the separation"
                )));
            }
        }
        Ok(Separation { side1, side2, cut })
    }

    pub fn order(&self) -> usize {
        self.cut.len()
    }
}
