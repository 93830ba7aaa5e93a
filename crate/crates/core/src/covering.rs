//! Edge signings, permutation voltage assignments, and the covering
//! graphs they derive.
//!
//! A signing maps every edge to +1 or -1 and derives a double cover:
//! each base vertex v splits into v_0 and v_1 (cover index 2v + sheet),
//! a +1 edge lifts parallel and a -1 edge lifts crossed. A permutation
//! voltage generalizes this to n sheets: the edge (u, v) taken in its
//! canonical min-to-max orientation carries a permutation of the sheet
//! set, and the reverse orientation carries the inverse.

use crate::graph::{Graph, SpanningSubgraph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CoveringError {
    #[error("sign list has {got} entries, base graph has {expected} edges")]
    SignCountMismatch { expected: usize, got: usize },
    #[error("voltage list has {got} entries, base graph has {expected} edges")]
    VoltageCountMismatch { expected: usize, got: usize },
    #[error("images {0:?} do not form a permutation of the sheet set")]
    NotAPermutation(Vec<usize>),
    #[error("permutation on {got} sheets attached to a {expected}-fold voltage")]
    FoldMismatch { expected: usize, got: usize },
    #[error("fold must be at least 1")]
    ZeroFold,
    #[error("fiber label list has {got} entries, covering graph has {expected} vertices")]
    FiberCountMismatch { expected: usize, got: usize },
    #[error("fiber label ({base_vertex}, {sheet}) out of range")]
    FiberLabelOutOfRange { base_vertex: usize, sheet: usize },
    #[error("base graph must be connected")]
    BaseDisconnected,
    #[error("base graph must not be bipartite")]
    BaseBipartite,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// An assignment of +1/-1 to every edge of a base graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Signing {
    base: Graph,
    signs: Vec<Sign>,
}

impl Signing {
    /// `signs` runs parallel to `base.edges()`.
    pub fn new(base: Graph, signs: Vec<Sign>) -> Result<Self, CoveringError> {
        if signs.len() != base.edge_count() {
            return Err(CoveringError::SignCountMismatch {
                expected: base.edge_count(),
                got: signs.len(),
            });
        }
        Ok(Self { base, signs })
    }

    pub fn all_plus(base: Graph) -> Self {
        let signs = vec![Sign::Plus; base.edge_count()];
        Self { base, signs }
    }

    pub fn all_minus(base: Graph) -> Self {
        let signs = vec![Sign::Minus; base.edge_count()];
        Self { base, signs }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn signs(&self) -> &[Sign] {
        &self.signs
    }

    pub fn sign(&self, u: usize, v: usize) -> Option<Sign> {
        self.base.edge_index(u, v).map(|i| self.signs[i])
    }

    /// Edges signed -1, as a spanning subgraph of the base.
    pub fn support(&self) -> SpanningSubgraph {
        self.signed_subgraph(Sign::Minus)
    }

    /// Edges signed +1, as a spanning subgraph of the base.
    pub fn cosupport(&self) -> SpanningSubgraph {
        self.signed_subgraph(Sign::Plus)
    }

    fn signed_subgraph(&self, wanted: Sign) -> SpanningSubgraph {
        let edges: Vec<_> = self
            .base
            .edges()
            .iter()
            .zip(&self.signs)
            .filter(|(_, &s)| s == wanted)
            .map(|(&e, _)| e)
            .collect();
        SpanningSubgraph::new(self.base.clone(), &edges).expect("edges come from the base")
    }
}

/// The signing whose +1 edges are exactly the edges of `h`.
pub fn signing_from_cosupport(h: &SpanningSubgraph) -> Signing {
    let base = h.parent().clone();
    let signs = base
        .edges()
        .iter()
        .map(|&(u, v)| if h.has_edge(u, v) { Sign::Plus } else { Sign::Minus })
        .collect();
    Signing { base, signs }
}

/// Permutation of `0..n` in one-line form: `apply(i)` is the image of `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, CoveringError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(CoveringError::NotAPermutation(images));
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// The transposition swapping sheets 0 and 1 of a 2-sheet set.
    pub fn swap2() -> Self {
        Self(vec![1, 0])
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &img)| i == img)
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &img) in self.0.iter().enumerate() {
            inv[img] = i;
        }
        Permutation(inv)
    }
}

/// A fold-n voltage assignment: each base edge, in its canonical
/// min-to-max orientation, carries a permutation of the sheets. The
/// reverse orientation implicitly carries the inverse, so the required
/// inverse symmetry holds by construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PermutationVoltage {
    base: Graph,
    fold: usize,
    voltages: Vec<Permutation>,
}

impl PermutationVoltage {
    /// `voltages` runs parallel to `base.edges()`.
    pub fn new(base: Graph, fold: usize, voltages: Vec<Permutation>) -> Result<Self, CoveringError> {
        if fold == 0 {
            return Err(CoveringError::ZeroFold);
        }
        if voltages.len() != base.edge_count() {
            return Err(CoveringError::VoltageCountMismatch {
                expected: base.edge_count(),
                got: voltages.len(),
            });
        }
        for p in &voltages {
            if p.degree() != fold {
                return Err(CoveringError::FoldMismatch {
                    expected: fold,
                    got: p.degree(),
                });
            }
        }
        Ok(Self {
            base,
            fold,
            voltages,
        })
    }

    pub fn identity(base: Graph, fold: usize) -> Result<Self, CoveringError> {
        let voltages = vec![Permutation::identity(fold); base.edge_count()];
        Self::new(base, fold, voltages)
    }

    /// The 2-fold encoding of a signing: +1 becomes the identity and -1
    /// the sheet swap.
    pub fn from_signing(signing: &Signing) -> Self {
        let voltages = signing
            .signs()
            .iter()
            .map(|s| match s {
                Sign::Plus => Permutation::identity(2),
                Sign::Minus => Permutation::swap2(),
            })
            .collect();
        Self {
            base: signing.base().clone(),
            fold: 2,
            voltages,
        }
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn fold(&self) -> usize {
        self.fold
    }

    pub fn voltages(&self) -> &[Permutation] {
        &self.voltages
    }

    /// Voltage of the directed edge `u -> v`.
    pub fn voltage(&self, u: usize, v: usize) -> Option<Permutation> {
        let idx = self.base.edge_index(u, v)?;
        let p = &self.voltages[idx];
        Some(if u < v { p.clone() } else { p.inverse() })
    }

    /// Edges carrying the identity permutation, as a spanning subgraph.
    pub fn cosupport(&self) -> SpanningSubgraph {
        let edges: Vec<_> = self
            .base
            .edges()
            .iter()
            .zip(&self.voltages)
            .filter(|(_, p)| p.is_identity())
            .map(|(&e, _)| e)
            .collect();
        SpanningSubgraph::new(self.base.clone(), &edges).expect("edges come from the base")
    }
}

/// A graph together with a projection onto a base graph, recorded as
/// one (base vertex, sheet) label per covering vertex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoveringGraph {
    graph: Graph,
    base: Graph,
    fold: usize,
    fiber_labels: Vec<(usize, usize)>,
}

impl CoveringGraph {
    /// Assembles a covering candidate from parts. Only shape is checked
    /// here; use [`verify_covering`] for the actual covering conditions.
    pub fn from_parts(
        graph: Graph,
        base: Graph,
        fold: usize,
        fiber_labels: Vec<(usize, usize)>,
    ) -> Result<Self, CoveringError> {
        if fiber_labels.len() != graph.vertex_count() {
            return Err(CoveringError::FiberCountMismatch {
                expected: graph.vertex_count(),
                got: fiber_labels.len(),
            });
        }
        for &(b, s) in &fiber_labels {
            if b >= base.vertex_count() || s >= fold {
                return Err(CoveringError::FiberLabelOutOfRange {
                    base_vertex: b,
                    sheet: s,
                });
            }
        }
        Ok(Self {
            graph,
            base,
            fold,
            fiber_labels,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn base(&self) -> &Graph {
        &self.base
    }

    pub fn fold(&self) -> usize {
        self.fold
    }

    pub fn fiber_labels(&self) -> &[(usize, usize)] {
        &self.fiber_labels
    }

    pub fn projection(&self, cover_vertex: usize) -> usize {
        self.fiber_labels[cover_vertex].0
    }

    pub fn sheet(&self, cover_vertex: usize) -> usize {
        self.fiber_labels[cover_vertex].1
    }
}

/// Double cover derived from a signing. Cover vertex `2v + s` is sheet
/// `s` over base vertex `v`; a +1 edge joins equal sheets, a -1 edge
/// joins opposite sheets.
pub fn derive_double_cover(signing: &Signing) -> CoveringGraph {
    let base = signing.base();
    let n = base.vertex_count();
    let mut edges = Vec::with_capacity(2 * base.edge_count());
    for (i, &(u, v)) in base.edges().iter().enumerate() {
        match signing.signs()[i] {
            Sign::Plus => {
                edges.push((2 * u, 2 * v));
                edges.push((2 * u + 1, 2 * v + 1));
            }
            Sign::Minus => {
                edges.push((2 * u, 2 * v + 1));
                edges.push((2 * u + 1, 2 * v));
            }
        }
    }
    let graph = Graph::new(2 * n, &edges).expect("lifted edges are valid");
    let fiber_labels = (0..2 * n).map(|w| (w / 2, w % 2)).collect();
    CoveringGraph {
        graph,
        base: base.clone(),
        fold: 2,
        fiber_labels,
    }
}

/// n-fold cover derived from a permutation voltage. Cover vertex
/// `fold * v + j` is sheet `j` over base vertex `v`; the canonical
/// orientation (u, v) with voltage p joins (u, j) to (v, p(j)).
pub fn derive_nfold_cover(voltage: &PermutationVoltage) -> CoveringGraph {
    let base = voltage.base();
    let n = base.vertex_count();
    let fold = voltage.fold();
    let mut edges = Vec::with_capacity(fold * base.edge_count());
    for (i, &(u, v)) in base.edges().iter().enumerate() {
        let p = &voltage.voltages()[i];
        for j in 0..fold {
            edges.push((fold * u + j, fold * v + p.apply(j)));
        }
    }
    let graph = Graph::new(fold * n, &edges).expect("lifted edges are valid");
    let fiber_labels = (0..fold * n).map(|w| (w / fold, w % fold)).collect();
    CoveringGraph {
        graph,
        base: base.clone(),
        fold,
        fiber_labels,
    }
}

/// First failure of the covering conditions, if any.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CoveringViolation {
    /// A base vertex whose fiber does not have exactly `fold` vertices.
    FiberSize {
        base_vertex: usize,
        expected: usize,
        actual: usize,
    },
    /// A covering vertex whose neighborhood does not project bijectively
    /// onto the neighborhood of its image.
    NotLocallyBijective { cover_vertex: usize },
}

/// Checks that fibers are uniform and that the projection restricts to a
/// bijection on every neighborhood.
pub fn verify_covering(cover: &CoveringGraph) -> Result<(), CoveringViolation> {
    let mut fiber_sizes = vec![0usize; cover.base.vertex_count()];
    for &(b, _) in &cover.fiber_labels {
        fiber_sizes[b] += 1;
    }
    for (b, &size) in fiber_sizes.iter().enumerate() {
        if size != cover.fold {
            return Err(CoveringViolation::FiberSize {
                base_vertex: b,
                expected: cover.fold,
                actual: size,
            });
        }
    }
    for w in cover.graph.vertices() {
        let image = cover.projection(w);
        let mut projected: Vec<usize> = cover
            .graph
            .neighbors(w)
            .iter()
            .map(|&x| cover.projection(x))
            .collect();
        projected.sort_unstable();
        let has_duplicates = projected.windows(2).any(|p| p[0] == p[1]);
        if has_duplicates || projected != cover.base.neighbors(image) {
            return Err(CoveringViolation::NotLocallyBijective { cover_vertex: w });
        }
    }
    Ok(())
}

/// Decides whether every cycle of the base carries sign +1 exactly when
/// its length is even. Both the sign product and the length parity are
/// linear over GF(2) on the cycle space, so checking a fundamental cycle
/// basis of a spanning tree decides all cycles. For a connected
/// non-bipartite base this holds iff the derived double cover is
/// bipartite.
pub fn z2_cycle_parity_check(signing: &Signing) -> Result<bool, CoveringError> {
    let base = signing.base();
    if !base.is_connected() {
        return Err(CoveringError::BaseDisconnected);
    }
    if base.is_bipartite() {
        return Err(CoveringError::BaseBipartite);
    }
    // BFS tree from vertex 0: track depth parity and sign product to root.
    let n = base.vertex_count();
    let mut depth_parity = vec![0u8; n];
    let mut sign_to_root = vec![Sign::Plus; n];
    let mut visited = vec![false; n];
    let mut queue = std::collections::VecDeque::new();
    visited[0] = true;
    queue.push_back(0usize);
    let mut in_tree = vec![false; base.edge_count()];
    while let Some(v) = queue.pop_front() {
        for &w in base.neighbors(v) {
            if !visited[w] {
                visited[w] = true;
                depth_parity[w] = 1 - depth_parity[v];
                let s = signing.sign(v, w).expect("tree edge");
                sign_to_root[w] = sign_to_root[v].times(s);
                in_tree[base.edge_index(v, w).expect("tree edge")] = true;
                queue.push_back(w);
            }
        }
    }
    for (i, &(u, v)) in base.edges().iter().enumerate() {
        if in_tree[i] {
            continue;
        }
        // Fundamental cycle of the non-tree edge (u, v): the tree path has
        // even length iff the depth parities agree, and the closing edge
        // adds one, so the cycle is even iff the parities differ.
        let cycle_is_even = depth_parity[u] != depth_parity[v];
        let cycle_sign = sign_to_root[u]
            .times(sign_to_root[v])
            .times(signing.signs()[i]);
        if (cycle_sign == Sign::Plus) != cycle_is_even {
            return Ok(false);
        }
    }
    Ok(true)
}
