//! Finite simple undirected graphs with dense 0-based vertex indices,
//! plus spanning subgraphs, vertex partitions, quotients and bipartition tests.

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(usize),
    #[error("edge ({0}, {1}) is not an edge of the parent graph")]
    NotParentEdge(usize, usize),
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("edge index set too large for a 64-bit mask ({0} edges)")]
    TooManyEdges(usize),
}

/// Simple undirected graph. Edges are stored sorted with `u < v`,
/// so equality, hashing and iteration order are canonical.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Endpoint order within a pair is
    /// irrelevant and duplicate pairs collapse; loops and out-of-range
    /// endpoints are rejected.
    pub fn new(vertex_count: usize, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut adjacency = vec![Vec::new(); vertex_count];
        for &(u, v) in &edges {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for row in &mut adjacency {
            row.sort_unstable();
        }
        Ok(Self {
            vertex_count,
            edges,
            adjacency,
        })
    }

    pub fn empty(vertex_count: usize) -> Self {
        Self::new(vertex_count, &[]).expect("empty graph is always valid")
    }

    pub fn complete(vertex_count: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..vertex_count {
            for v in (u + 1)..vertex_count {
                edges.push((u, v));
            }
        }
        Self::new(vertex_count, &edges).expect("complete graph is always valid")
    }

    pub fn cycle(vertex_count: usize) -> Self {
        assert!(vertex_count >= 3, "a cycle needs at least 3 vertices");
        let edges: Vec<_> = (0..vertex_count)
            .map(|v| (v, (v + 1) % vertex_count))
            .collect();
        Self::new(vertex_count, &edges).expect("cycle graph is always valid")
    }

    pub fn path(vertex_count: usize) -> Self {
        let edges: Vec<_> = (1..vertex_count).map(|v| (v - 1, v)).collect();
        Self::new(vertex_count, &edges).expect("path graph is always valid")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u == v || u >= self.vertex_count || v >= self.vertex_count {
            return false;
        }
        self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Position of `(u, v)` in the sorted edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    pub fn is_connected(&self) -> bool {
        self.components().block_count() <= 1
    }

    /// Connected components as a partition whose blocks are listed in
    /// ascending order of minimum vertex index.
    pub fn components(&self) -> Partition {
        let mut seen = vec![false; self.vertex_count];
        let mut blocks = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.vertex_count {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            queue.push_back(root);
            let mut block = Vec::new();
            while let Some(v) = queue.pop_front() {
                block.push(v);
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        queue.push_back(w);
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        Partition::new(self.vertex_count, blocks).expect("component blocks form a partition")
    }

    /// Proper 2-coloring with sides 0/1 if the graph is bipartite.
    /// The lowest vertex of each component gets side 0.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let mut side = vec![u8::MAX; self.vertex_count];
        let mut queue = std::collections::VecDeque::new();
        for root in 0..self.vertex_count {
            if side[root] != u8::MAX {
                continue;
            }
            side[root] = 0;
            queue.push_back(root);
            while let Some(v) = queue.pop_front() {
                for &w in self.neighbors(v) {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[v];
                        queue.push_back(w);
                    } else if side[w] == side[v] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Subgraph induced by the vertex set `s`, relabeled onto
    /// `0..s.len()` in ascending original order. The returned map sends
    /// each new index to its original vertex.
    pub fn induced(&self, s: &[usize]) -> Result<(Graph, Vec<usize>), GraphError> {
        let mut verts: Vec<usize> = s.to_vec();
        verts.sort_unstable();
        verts.dedup();
        if let Some(&v) = verts.iter().find(|&&v| v >= self.vertex_count) {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            });
        }
        let mut new_index = vec![usize::MAX; self.vertex_count];
        for (i, &v) in verts.iter().enumerate() {
            new_index[v] = i;
        }
        let mut edges = Vec::new();
        for &(u, v) in &self.edges {
            if new_index[u] != usize::MAX && new_index[v] != usize::MAX {
                edges.push((new_index[u], new_index[v]));
            }
        }
        let graph = Graph::new(verts.len(), &edges)?;
        Ok((graph, verts))
    }

    /// Quotient by a partition: one vertex per block, blocks adjacent iff
    /// some edge of `self` joins them. Block-internal edges are dropped,
    /// so the quotient is always simple.
    pub fn quotient(&self, partition: &Partition) -> Result<Graph, GraphError> {
        if partition.vertex_count() != self.vertex_count {
            return Err(GraphError::InvalidPartition(format!(
                "partition covers {} vertices, graph has {}",
                partition.vertex_count(),
                self.vertex_count
            )));
        }
        let block_of = partition.block_index_map();
        let mut edges = std::collections::BTreeSet::new();
        for &(u, v) in &self.edges {
            let (bu, bv) = (block_of[u], block_of[v]);
            if bu != bv {
                edges.insert((bu.min(bv), bu.max(bv)));
            }
        }
        let edge_vec: Vec<_> = edges.into_iter().collect();
        Graph::new(partition.block_count(), &edge_vec)
    }
}

/// Subgraph of a fixed parent on the parent's full vertex set.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpanningSubgraph {
    parent: Graph,
    edges: Vec<(usize, usize)>,
}

impl SpanningSubgraph {
    pub fn new(parent: Graph, edge_list: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(a, b) in edge_list {
            let (u, v) = (a.min(b), a.max(b));
            if parent.edge_index(u, v).is_none() {
                return Err(GraphError::NotParentEdge(a, b));
            }
            edges.push((u, v));
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self { parent, edges })
    }

    /// Edgeless spanning subgraph (the null graph on the parent's vertices).
    pub fn null(parent: Graph) -> Self {
        Self {
            parent,
            edges: Vec::new(),
        }
    }

    /// The parent itself viewed as its own spanning subgraph.
    pub fn full(parent: Graph) -> Self {
        let edges = parent.edges().to_vec();
        Self { parent, edges }
    }

    /// Subgraph selected by a bitmask over the parent's sorted edge list.
    pub fn from_edge_mask(parent: Graph, mask: u64) -> Result<Self, GraphError> {
        if parent.edge_count() > 64 {
            return Err(GraphError::TooManyEdges(parent.edge_count()));
        }
        let edges: Vec<_> = parent
            .edges()
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Ok(Self { parent, edges })
    }

    pub fn edge_mask(&self) -> Result<u64, GraphError> {
        if self.parent.edge_count() > 64 {
            return Err(GraphError::TooManyEdges(self.parent.edge_count()));
        }
        let mut mask = 0u64;
        for &(u, v) in &self.edges {
            mask |= 1 << self.parent.edge_index(u, v).expect("subset edge");
        }
        Ok(mask)
    }

    pub fn parent(&self) -> &Graph {
        &self.parent
    }

    pub fn vertex_count(&self) -> usize {
        self.parent.vertex_count()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).is_ok()
    }

    /// The subgraph's own structure as a standalone graph.
    pub fn as_graph(&self) -> Graph {
        Graph::new(self.parent.vertex_count(), &self.edges).expect("subset of valid edges")
    }

    /// Spanning subgraph on the parent's remaining edges.
    pub fn complement_within(&self) -> SpanningSubgraph {
        let edges: Vec<_> = self
            .parent
            .edges()
            .iter()
            .filter(|e| self.edges.binary_search(e).is_err())
            .copied()
            .collect();
        SpanningSubgraph {
            parent: self.parent.clone(),
            edges,
        }
    }

    /// Parent edges absent from this subgraph, sorted.
    pub fn complement_edges(&self) -> Vec<(usize, usize)> {
        self.parent
            .edges()
            .iter()
            .filter(|e| self.edges.binary_search(e).is_err())
            .copied()
            .collect()
    }
}

/// Partition of `0..vertex_count` into disjoint nonempty blocks.
/// Blocks are kept sorted internally and ordered by minimum element.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    vertex_count: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(vertex_count: usize, blocks: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut seen = vec![false; vertex_count];
        let mut normalized = Vec::with_capacity(blocks.len());
        for block in blocks {
            if block.is_empty() {
                return Err(GraphError::InvalidPartition("empty block".into()));
            }
            let mut block = block;
            block.sort_unstable();
            block.dedup();
            for &v in &block {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        vertex_count,
                    });
                }
                if seen[v] {
                    return Err(GraphError::InvalidPartition(format!(
                        "vertex {v} appears in two blocks"
                    )));
                }
                seen[v] = true;
            }
            normalized.push(block);
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(GraphError::InvalidPartition(format!(
                "vertex {v} is not covered"
            )));
        }
        normalized.sort_by_key(|b| b[0]);
        Ok(Self {
            vertex_count,
            blocks: normalized,
        })
    }

    pub fn singletons(vertex_count: usize) -> Self {
        let blocks = (0..vertex_count).map(|v| vec![v]).collect();
        Self::new(vertex_count, blocks).expect("singleton blocks form a partition")
    }

    pub fn single_block(vertex_count: usize) -> Self {
        assert!(vertex_count > 0, "a partition of the empty set has no blocks");
        Self::new(vertex_count, vec![(0..vertex_count).collect()])
            .expect("single block forms a partition")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Map from vertex to the index of its block.
    pub fn block_index_map(&self) -> Vec<usize> {
        let mut map = vec![usize::MAX; self.vertex_count];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                map[v] = i;
            }
        }
        map
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn diamond() -> Graph {
        // K4 minus one edge; vertices 0,1 are the hubs.
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn constructor_rejects_loops_and_range() {
        assert_eq!(Graph::new(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert!(matches!(
            Graph::new(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn constructor_normalizes_edges() {
        let g = Graph::new(3, &[(2, 0), (0, 2), (1, 0)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2)]);
        assert!(g.has_edge(2, 0));
        assert!(!g.has_edge(1, 2));
    }

    #[test]
    fn complement_of_full_is_null_and_back() {
        let g = Graph::complete(4);
        let full = SpanningSubgraph::full(g.clone());
        let null = full.complement_within();
        assert_eq!(null.edge_count(), 0);
        assert_eq!(null.complement_within(), full);
    }

    #[test]
    fn complement_of_cycle_subgraph_in_diamond_is_single_chord() {
        // The 4-edge subgraph drawn alongside the 5-edge base leaves
        // exactly one chord in the complement.
        let g = diamond();
        let h = SpanningSubgraph::new(g, &[(0, 1), (0, 2), (1, 2), (1, 3)]).unwrap();
        let comp = h.complement_within();
        assert_eq!(comp.edges(), &[(0, 3)]);
    }

    #[test]
    fn complement_edge_counts_partition_parent() {
        let g = diamond();
        for mask in 0..32u64 {
            let h = SpanningSubgraph::from_edge_mask(g.clone(), mask).unwrap();
            let c = h.complement_within();
            assert_eq!(h.edge_count() + c.edge_count(), g.edge_count());
            assert_eq!(c.complement_within(), h);
        }
    }

    #[test]
    fn induced_subgraph_of_complete_is_complete() {
        let g = Graph::complete(5);
        let (k3, map) = g.induced(&[4, 1, 2]).unwrap();
        assert_eq!(map, vec![1, 2, 4]);
        assert_eq!(k3, Graph::complete(3));
    }

    #[test]
    fn induced_identity_and_singleton() {
        let g = diamond();
        let (same, map) = g.induced(&[0, 1, 2, 3]).unwrap();
        assert_eq!(same, g);
        assert_eq!(map, vec![0, 1, 2, 3]);
        let (one, _) = g.induced(&[2]).unwrap();
        assert_eq!(one.vertex_count(), 1);
        assert_eq!(one.edge_count(), 0);
        assert!(g.induced(&[7]).is_err());
    }

    #[test]
    fn quotient_examples() {
        let k4 = Graph::complete(4);
        let p = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        assert_eq!(k4.quotient(&p).unwrap(), Graph::complete(2));

        let g = diamond();
        let singles = Partition::singletons(4);
        assert_eq!(g.quotient(&singles).unwrap(), g);
        let one = Partition::single_block(4);
        assert_eq!(g.quotient(&one).unwrap(), Graph::complete(1));
    }

    #[test]
    fn components_order_and_blocks() {
        // One edge plus three isolated vertices inside K5's vertex set.
        let h = Graph::new(5, &[(0, 1)]).unwrap();
        let p = h.components();
        assert_eq!(
            p.blocks(),
            &[vec![0, 1], vec![2], vec![3], vec![4]]
        );

        assert_eq!(Graph::empty(5).components().block_count(), 5);
        assert_eq!(diamond().components().block_count(), 1);
    }

    #[test]
    fn bipartition_cases() {
        assert!(Graph::cycle(6).bipartition().is_some());
        assert!(Graph::cycle(5).bipartition().is_none());
        // Contains a triangle.
        assert!(diamond().bipartition().is_none());
        let side = Graph::new(4, &[(0, 1), (2, 3)]).unwrap().bipartition().unwrap();
        assert_eq!(side[0], 0);
        assert_eq!(side[2], 0);
        assert_ne!(side[0], side[1]);
        assert_ne!(side[2], side[3]);
    }

    #[test]
    fn bipartition_matches_exhaustive_two_coloring() {
        // Oracle: try all 2^n two-sided assignments.
        for n in 1..=6usize {
            for mask in 0..(1u64 << (n * (n - 1) / 2)) {
                if n >= 5 && mask % 7 != 0 {
                    continue; // thin out the larger sizes
                }
                let mut edges = Vec::new();
                let mut bit = 0;
                for u in 0..n {
                    for v in (u + 1)..n {
                        if mask >> bit & 1 == 1 {
                            edges.push((u, v));
                        }
                        bit += 1;
                    }
                }
                let g = Graph::new(n, &edges).unwrap();
                let brute = (0..(1u32 << n)).any(|assign| {
                    g.edges()
                        .iter()
                        .all(|&(u, v)| (assign >> u & 1) != (assign >> v & 1))
                });
                assert_eq!(g.bipartition().is_some(), brute);
            }
        }
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(3, vec![vec![0], vec![1, 2]]).is_ok());
        assert!(Partition::new(3, vec![vec![0], vec![1]]).is_err());
        assert!(Partition::new(3, vec![vec![0, 1], vec![1, 2]]).is_err());
        assert!(Partition::new(3, vec![vec![0], vec![], vec![1, 2]]).is_err());
        assert!(Partition::new(2, vec![vec![0], vec![1], vec![2]]).is_err());
    }

    #[test]
    fn spanning_subgraph_rejects_foreign_edges() {
        let g = diamond();
        assert!(matches!(
            SpanningSubgraph::new(g, &[(2, 3)]),
            Err(GraphError::NotParentEdge(2, 3))
        ));
    }
}
