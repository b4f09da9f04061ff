//! H-bridges of a subgraph and chains of blocks between two vertices,
//! on top of a classical low-point block decomposition.

use crate::graph::{CycleSeq, Graph, GraphError, PathSeq, VertexId};
use serde::{Deserialize, Serialize};

/// A subgraph given explicitly by its vertices and edges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubgraphSpec {
    pub verts: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl SubgraphSpec {
    pub fn new(mut verts: Vec<VertexId>, edges: Vec<(VertexId, VertexId)>) -> SubgraphSpec {
        verts.sort_unstable();
        verts.dedup();
        let mut edges: Vec<_> = edges
            .into_iter()
            .map(|(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        edges.dedup();
        SubgraphSpec { verts, edges }
    }

    pub fn from_path(p: &PathSeq) -> SubgraphSpec {
        SubgraphSpec::new(p.vertices().to_vec(), p.edges())
    }

    pub fn from_cycle(c: &CycleSeq) -> SubgraphSpec {
        SubgraphSpec::new(c.vertices().to_vec(), c.edges())
    }

    pub fn induced(g: &Graph, verts: &[VertexId]) -> SubgraphSpec {
        let set: std::collections::HashSet<_> = verts.iter().copied().collect();
        let edges = g
            .edges()
            .into_iter()
            .filter(|&(u, v)| set.contains(&u) && set.contains(&v))
            .collect();
        SubgraphSpec::new(verts.to_vec(), edges)
    }

    fn validate_in(&self, g: &Graph) -> Result<(), GraphError> {
        for &v in &self.verts {
            if v >= g.n() {
                return Err(GraphError::NotSubgraph(format!("vertex {v} out of range")));
            }
        }
        let vset: std::collections::HashSet<_> = self.verts.iter().copied().collect();
        for &(u, v) in &self.edges {
            if !g.has_edge(u, v) {
                return Err(GraphError::NotSubgraph(format!("edge {u}-{v} not in graph")));
            }
            if !vset.contains(&u) || !vset.contains(&v) {
                return Err(GraphError::NotSubgraph(format!(
                    "edge {u}-{v} has an end outside the vertex set"
                )));
            }
        }
        Ok(())
    }
}

/// An H-bridge: a chord of H, or one component of G-H together with its
/// attachment edges into H.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum BridgeKind {
    Chord,
    Component,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BridgeRec {
    pub kind: BridgeKind,
    /// Vertices outside H (empty for a chord).
    pub core: Vec<VertexId>,
    /// Attachment vertices on H.
    pub attachments: Vec<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
}

/// All H-bridges of `g`. Every edge of g - E(h) lies in exactly one
/// bridge; chords come first (sorted), then component bridges ordered by
/// smallest core vertex.
pub fn enumerate_bridges(g: &Graph, h: &SubgraphSpec) -> Result<Vec<BridgeRec>, GraphError> {
    h.validate_in(g)?;
    let in_h = {
        let mut m = vec![false; g.n()];
        for &v in &h.verts {
            m[v] = true;
        }
        m
    };
    let h_edges: std::collections::HashSet<_> = h.edges.iter().copied().collect();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if in_h[u] && in_h[v] && !h_edges.contains(&(u, v)) {
            out.push(BridgeRec {
                kind: BridgeKind::Chord,
                core: vec![],
                attachments: vec![u, v],
                edges: vec![(u, v)],
            });
        }
    }
    let mask: Vec<bool> = (0..g.n()).map(|v| !in_h[v]).collect();
    for core in g.components_masked(&mask) {
        let in_core = {
            let mut m = vec![false; g.n()];
            for &v in &core {
                m[v] = true;
            }
            m
        };
        let mut edges = Vec::new();
        let mut attachments = Vec::new();
        for &v in &core {
            for &w in g.neighbors(v) {
                if in_core[w] {
                    if v < w {
                        edges.push((v, w));
                    }
                } else if in_h[w] {
                    edges.push((v.min(w), v.max(w)));
                    attachments.push(w);
                }
            }
        }
        attachments.sort_unstable();
        attachments.dedup();
        edges.sort_unstable();
        edges.dedup();
        out.push(BridgeRec {
            kind: BridgeKind::Component,
            core,
            attachments,
            edges,
        });
    }
    Ok(out)
}

// ---------------------------------------------------------------------
// Blocks.

/// Blocks (maximal 2-connected subgraphs or cut edges) as sorted vertex
/// sets, ordered by smallest contained edge. Isolated vertices belong to
/// no block.
pub fn blocks(g: &Graph) -> Vec<Vec<VertexId>> {
    struct Dfs<'a> {
        g: &'a Graph,
        num: Vec<usize>,
        low: Vec<usize>,
        counter: usize,
        stack: Vec<(VertexId, VertexId)>,
        blocks: Vec<Vec<VertexId>>,
    }
    impl Dfs<'_> {
        fn run(&mut self, v: VertexId, parent: Option<VertexId>) {
            self.counter += 1;
            self.num[v] = self.counter;
            self.low[v] = self.counter;
            let mut parent_skipped = false;
            for &w in self.g.neighbors(v) {
                if Some(w) == parent && !parent_skipped {
                    parent_skipped = true;
                    continue;
                }
                if self.num[w] == 0 {
                    self.stack.push((v, w));
                    self.run(w, Some(v));
                    self.low[v] = self.low[v].min(self.low[w]);
                    if self.low[w] >= self.num[v] {
                        // v closes a block.
                        let mut verts = Vec::new();
                        while let Some(&(a, b)) = self.stack.last() {
                            if self.num[a] >= self.num[w] {
                                self.stack.pop();
                                verts.push(a);
                                verts.push(b);
                            } else {
                                break;
                            }
                        }
                        let (a, b) = self.stack.pop().expect("block root edge");
                        verts.push(a);
                        verts.push(b);
                        verts.sort_unstable();
                        verts.dedup();
                        self.blocks.push(verts);
                    }
                } else if self.num[w] < self.num[v] {
                    self.stack.push((v, w));
                    self.low[v] = self.low[v].min(self.num[w]);
                }
            }
        }
    }
    let mut dfs = Dfs {
        g,
        num: vec![0; g.n()],
        low: vec![0; g.n()],
        counter: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..g.n() {
        if dfs.num[v] == 0 && g.degree(v) > 0 {
            dfs.run(v, None);
        }
    }
    dfs.blocks.sort();
    dfs.blocks
}

/// Cut vertices: those belonging to two or more blocks.
pub fn articulation_points(g: &Graph) -> Vec<VertexId> {
    let mut count = vec![0usize; g.n()];
    for b in blocks(g) {
        for v in b {
            count[v] += 1;
        }
    }
    (0..g.n()).filter(|&v| count[v] >= 2).collect()
}

/// Connected with no cut vertex and at least 3 vertices.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && articulation_points(g).is_empty()
}

/// A chain of blocks from `u` to `v`: consecutive blocks share exactly
/// one cut vertex, non-consecutive blocks are disjoint.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainOfBlocks {
    pub blocks: Vec<Vec<VertexId>>,
    pub cut_vertices: Vec<VertexId>,
    pub endpoints: (VertexId, VertexId),
}

impl ChainOfBlocks {
    pub fn vertex_set(&self) -> Vec<VertexId> {
        let mut out: Vec<_> = self.blocks.iter().flatten().copied().collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Structural re-validation: each listed block is a block of `g`,
    /// the overlap pattern is a chain, and the endpoints sit at the ends.
    pub fn verify(&self, g: &Graph) -> bool {
        let gblocks = blocks(g);
        for b in &self.blocks {
            if !gblocks.contains(b) {
                return false;
            }
        }
        let k = self.blocks.len();
        if k == 0 || self.cut_vertices.len() != k - 1 {
            return false;
        }
        let (u, v) = self.endpoints;
        if k == 1 {
            return u != v && self.blocks[0].contains(&u) && self.blocks[0].contains(&v);
        }
        if !self.blocks[0].contains(&u)
            || self.blocks[1].contains(&u)
            || !self.blocks[k - 1].contains(&v)
            || self.blocks[k - 2].contains(&v)
        {
            return false;
        }
        for i in 0..k {
            for j in (i + 1)..k {
                let inter: Vec<_> = self.blocks[i]
                    .iter()
                    .filter(|x| self.blocks[j].contains(x))
                    .collect();
                if j == i + 1 {
                    if inter.len() != 1 || *inter[0] != self.cut_vertices[i] {
                        return false;
                    }
                } else if !inter.is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Result of a chain-of-blocks query: the chain between the endpoints
/// plus whatever hangs off it. Callers testing "G is a chain of blocks
/// from u to v" require `hanging` to be empty.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainResult {
    pub chain: ChainOfBlocks,
    /// Components of g minus the chain's vertices.
    pub hanging: Vec<Vec<VertexId>>,
}

/// The unique block-path between `u` and `v` in the block-cut tree, or
/// `None` when they are disconnected.
pub fn chain_of_blocks(
    g: &Graph,
    u: VertexId,
    v: VertexId,
) -> Result<Option<ChainResult>, GraphError> {
    if u == v {
        return Err(GraphError::InvalidPath("chain endpoints coincide".into()));
    }
    if u >= g.n() {
        return Err(GraphError::VertexOutOfRange(u, g.n()));
    }
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange(v, g.n()));
    }
    let comps = g.components();
    let cu = comps.iter().position(|c| c.contains(&u));
    let cv = comps.iter().position(|c| c.contains(&v));
    if cu.is_none() || cu != cv {
        return Ok(None);
    }
    let all_blocks = blocks(g);
    let cuts = articulation_points(g);
    let is_cut = {
        let mut m = vec![false; g.n()];
        for &c in &cuts {
            m[c] = true;
        }
        m
    };
    // Block-cut tree: nodes 0..nb are blocks, nb..nb+nc are cut vertices.
    let nb = all_blocks.len();
    let cut_index: std::collections::HashMap<VertexId, usize> =
        cuts.iter().enumerate().map(|(i, &c)| (c, nb + i)).collect();
    let mut tree_adj = vec![Vec::new(); nb + cuts.len()];
    for (bi, b) in all_blocks.iter().enumerate() {
        for &x in b {
            if is_cut[x] {
                let ci = cut_index[&x];
                tree_adj[bi].push(ci);
                tree_adj[ci].push(bi);
            }
        }
    }
    let node_of = |x: VertexId| -> usize {
        if is_cut[x] {
            cut_index[&x]
        } else {
            all_blocks
                .iter()
                .position(|b| b.contains(&x))
                .expect("non-isolated vertex lies in a block")
        }
    };
    let start = node_of(u);
    let goal = node_of(v);
    // BFS through the tree.
    let mut prev = vec![usize::MAX; tree_adj.len()];
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(start);
    prev[start] = start;
    while let Some(x) = queue.pop_front() {
        if x == goal {
            break;
        }
        for &y in &tree_adj[x] {
            if prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    debug_assert!(prev[goal] != usize::MAX, "same component implies tree path");
    let mut nodes = vec![goal];
    let mut cur = goal;
    while cur != start {
        cur = prev[cur];
        nodes.push(cur);
    }
    nodes.reverse();
    let chain_blocks: Vec<Vec<VertexId>> = nodes
        .iter()
        .filter(|&&x| x < nb)
        .map(|&x| all_blocks[x].clone())
        .collect();
    let cut_vertices: Vec<VertexId> = chain_blocks
        .windows(2)
        .map(|w| {
            *w[0]
                .iter()
                .find(|x| w[1].contains(x))
                .expect("consecutive chain blocks share the cut vertex")
        })
        .collect();
    let chain = ChainOfBlocks {
        blocks: chain_blocks,
        cut_vertices,
        endpoints: (u, v),
    };
    let chain_set = chain.vertex_set();
    let mut mask = vec![true; g.n()];
    for &x in &chain_set {
        mask[x] = false;
    }
    let hanging = g.components_masked(&mask);
    Ok(Some(ChainResult { chain, hanging }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;

    #[test]
    fn bridges_of_cycle_in_k4() {
        let k4 = Graph::complete(4);
        let c = CycleSeq::new(&k4, vec![0, 1, 2, 3]).unwrap();
        let bridges = enumerate_bridges(&k4, &SubgraphSpec::from_cycle(&c)).unwrap();
        assert_eq!(bridges.len(), 2);
        assert!(bridges.iter().all(|b| b.kind == BridgeKind::Chord));
    }

    #[test]
    fn bridges_of_triangle_in_k4() {
        let k4 = Graph::complete(4);
        let h = SubgraphSpec::induced(&k4, &[0, 1, 2]);
        let bridges = enumerate_bridges(&k4, &h).unwrap();
        assert_eq!(bridges.len(), 1);
        assert_eq!(bridges[0].kind, BridgeKind::Component);
        assert_eq!(bridges[0].core, vec![3]);
        assert_eq!(bridges[0].attachments, vec![0, 1, 2]);
        assert_eq!(bridges[0].edges.len(), 3);
    }

    #[test]
    fn bridges_of_petersen_outer_cycle() {
        let mut edges = vec![];
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, 5 + (i + 2) % 5));
        }
        let pet = build_graph(10, &edges).unwrap();
        let c = CycleSeq::new(&pet, vec![0, 1, 2, 3, 4]).unwrap();
        let bridges = enumerate_bridges(&pet, &SubgraphSpec::from_cycle(&c)).unwrap();
        assert_eq!(bridges.len(), 1);
        assert_eq!(bridges[0].core, vec![5, 6, 7, 8, 9]);
        assert_eq!(bridges[0].attachments, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn bridges_partition_non_h_edges() {
        let g = build_graph(
            7,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3), (1, 6), (6, 4)],
        )
        .unwrap();
        let h = SubgraphSpec::induced(&g, &[0, 1, 2]);
        let bridges = enumerate_bridges(&g, &h).unwrap();
        let mut covered: Vec<_> = bridges.iter().flat_map(|b| b.edges.clone()).collect();
        covered.sort_unstable();
        let mut expected: Vec<_> = g
            .edges()
            .into_iter()
            .filter(|e| !h.edges.contains(e))
            .collect();
        expected.sort_unstable();
        assert_eq!(covered, expected);
        for b in &bridges {
            if b.kind == BridgeKind::Component {
                let nb = g.neighborhood_of_set(&b.core);
                let expect: Vec<_> = nb.into_iter().filter(|x| h.verts.contains(x)).collect();
                assert_eq!(b.attachments, expect);
            }
        }
    }

    #[test]
    fn blocks_of_two_triangles_sharing_a_vertex() {
        let g = build_graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let bs = blocks(&g);
        assert_eq!(bs, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert_eq!(articulation_points(&g), vec![2]);
    }

    #[test]
    fn chain_on_path_graph() {
        let g = build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let res = chain_of_blocks(&g, 0, 3).unwrap().unwrap();
        assert_eq!(res.chain.blocks.len(), 3);
        assert_eq!(res.chain.cut_vertices, vec![1, 2]);
        assert!(res.hanging.is_empty());
        assert!(res.chain.verify(&g));
    }

    #[test]
    fn chain_on_cycle_is_single_block() {
        let c5 = Graph::cycle(5);
        let res = chain_of_blocks(&c5, 0, 3).unwrap().unwrap();
        assert_eq!(res.chain.blocks.len(), 1);
        assert!(res.hanging.is_empty());
        assert!(res.chain.verify(&c5));
    }

    #[test]
    fn chain_on_two_triangles() {
        let g = build_graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]).unwrap();
        let res = chain_of_blocks(&g, 0, 4).unwrap().unwrap();
        assert_eq!(res.chain.blocks.len(), 2);
        assert_eq!(res.chain.cut_vertices, vec![2]);
        assert!(res.chain.verify(&g));
    }

    #[test]
    fn chain_reports_hanging_material() {
        // Path 0-1-2 with a pendant triangle at 1.
        let g = build_graph(5, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 1)]).unwrap();
        let res = chain_of_blocks(&g, 0, 2).unwrap().unwrap();
        assert_eq!(res.chain.blocks.len(), 2);
        assert_eq!(res.hanging, vec![vec![3, 4]]);
    }

    #[test]
    fn chain_absent_and_errors() {
        let g = build_graph(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(chain_of_blocks(&g, 0, 3).unwrap().is_none());
        assert!(chain_of_blocks(&g, 1, 1).is_err());
    }

    #[test]
    fn chain_agrees_with_brute_force_on_small_graphs() {
        // All graphs on 5 labeled vertices from a fixed sweep: the chain
        // union must equal the u-v "2-connected-component path" computed
        // naively from blocks.
        let all5: Vec<(usize, usize)> =
            (0..5).flat_map(|u| ((u + 1)..5).map(move |v| (u, v))).collect();
        let mut state = 0x9e3779b97f4a7c15u64;
        for _ in 0..300 {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            let bits = state as u32;
            let edges: Vec<_> = all5
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = build_graph(5, &edges).unwrap();
            if let Some(res) = chain_of_blocks(&g, 0, 4).unwrap() {
                assert!(res.chain.verify(&g), "{g:?}");
                // Chain plus hanging components account for every vertex.
                let union = res.chain.vertex_set();
                let hang_total: usize = res.hanging.iter().map(|h| h.len()).sum();
                assert_eq!(union.len() + hang_total, g.n());
            }
        }
    }
}
