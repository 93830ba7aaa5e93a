//! Exact vertex coloring and the relative chromatic number of a
//! spanning subgraph, computed two independent ways.
//!
//! The direct route searches for a pair of colorings of H that are
//! proper on H and compatible across the remaining edges of G: for each
//! such edge (u, v), f(u) != g(v) and f(v) != g(u). The second route
//! colors the double cover derived from the signing whose +1 edges are
//! exactly H. The two must agree; the acceptance suite exercises that
//! equality exhaustively on small graphs.

use crate::covering::{derive_double_cover, derive_nfold_cover, signing_from_cosupport, PermutationVoltage};
use crate::graph::{Graph, SpanningSubgraph};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ChromaticError {
    #[error("vertex {vertex} has color {color} outside the palette 1..={palette}")]
    ColorOutOfPalette {
        vertex: usize,
        color: u32,
        palette: u32,
    },
    #[error("coloring covers {got} vertices, graph has {expected}")]
    VertexCountMismatch { expected: usize, got: usize },
    #[error("{label} coloring is not proper on the subgraph: edge ({}, {}) is monochromatic", edge.0, edge.1)]
    NotProper {
        label: &'static str,
        edge: (usize, usize),
    },
    #[error("expected {expected} colorings for the sheet set, got {got}")]
    TupleSizeMismatch { expected: usize, got: usize },
}

/// Total assignment of colors `1..=palette` to the vertices of some graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    colors: Vec<u32>,
    palette: u32,
}

impl Coloring {
    pub fn new(colors: Vec<u32>, palette: u32) -> Result<Self, ChromaticError> {
        for (v, &c) in colors.iter().enumerate() {
            if c == 0 || c > palette {
                return Err(ChromaticError::ColorOutOfPalette {
                    vertex: v,
                    color: c,
                    palette,
                });
            }
        }
        Ok(Self { colors, palette })
    }

    pub fn vertex_count(&self) -> usize {
        self.colors.len()
    }

    pub fn palette(&self) -> u32 {
        self.palette
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn first_conflict_on(&self, g: &Graph) -> Option<(usize, usize)> {
        g.edges()
            .iter()
            .find(|&&(u, v)| self.colors[u] == self.colors[v])
            .copied()
    }

    pub fn is_proper_on(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count() && self.first_conflict_on(g).is_none()
    }

    pub fn is_proper_on_subgraph(&self, h: &SpanningSubgraph) -> bool {
        self.colors.len() == h.vertex_count()
            && h.edges().iter().all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Backtracking k-colorability on one connected graph, DSATUR ordered:
/// the next vertex maximizes the number of distinct neighbor colors,
/// ties broken by degree then by index, and only one fresh color is
/// ever branched on.
struct KColorSearch<'a> {
    graph: &'a Graph,
    k: u32,
    colors: Vec<u32>,
    // neighbor_color_counts[v][c-1]: how many neighbors of v have color c.
    neighbor_color_counts: Vec<Vec<u32>>,
    saturation: Vec<u32>,
}

impl<'a> KColorSearch<'a> {
    fn new(graph: &'a Graph, k: u32) -> Self {
        let n = graph.vertex_count();
        Self {
            graph,
            k,
            colors: vec![0; n],
            neighbor_color_counts: vec![vec![0; k as usize]; n],
            saturation: vec![0; n],
        }
    }

    fn assign(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
        for &w in self.graph.neighbors(v) {
            let slot = &mut self.neighbor_color_counts[w][(c - 1) as usize];
            *slot += 1;
            if *slot == 1 {
                self.saturation[w] += 1;
            }
        }
    }

    fn unassign(&mut self, v: usize, c: u32) {
        self.colors[v] = 0;
        for &w in self.graph.neighbors(v) {
            let slot = &mut self.neighbor_color_counts[w][(c - 1) as usize];
            *slot -= 1;
            if *slot == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn pick_vertex(&self) -> Option<usize> {
        let mut best: Option<(u32, usize, usize)> = None;
        for v in 0..self.colors.len() {
            if self.colors[v] != 0 {
                continue;
            }
            let key = (self.saturation[v], self.graph.degree(v), v);
            let better = match best {
                None => true,
                Some((sat, deg, idx)) => {
                    (key.0, key.1) > (sat, deg) || ((key.0, key.1) == (sat, deg) && v < idx)
                }
            };
            if better {
                best = Some(key);
            }
        }
        best.map(|(_, _, v)| v)
    }

    fn solve(&mut self, max_used: u32) -> bool {
        let Some(v) = self.pick_vertex() else {
            return true;
        };
        let limit = self.k.min(max_used + 1);
        for c in 1..=limit {
            if self.neighbor_color_counts[v][(c - 1) as usize] == 0 {
                self.assign(v, c);
                if self.solve(max_used.max(c)) {
                    return true;
                }
                self.unassign(v, c);
            }
        }
        false
    }
}

/// Greedy clique in degree order; its size lower-bounds the chromatic
/// number.
fn greedy_clique_size(g: &Graph) -> u32 {
    let mut order: Vec<usize> = g.vertices().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut clique: Vec<usize> = Vec::new();
    for v in order {
        if clique.iter().all(|&u| g.has_edge(u, v)) {
            clique.push(v);
        }
    }
    clique.len() as u32
}

/// Greedy DSATUR pass without backtracking; returns an upper bound with
/// a witness coloring.
fn dsatur_greedy(g: &Graph) -> (u32, Vec<u32>) {
    let n = g.vertex_count();
    let mut search = KColorSearch::new(g, n.max(1) as u32);
    let mut used = 0u32;
    while let Some(v) = search.pick_vertex() {
        let mut c = 1;
        while search.neighbor_color_counts[v][(c - 1) as usize] != 0 {
            c += 1;
        }
        used = used.max(c);
        search.assign(v, c);
    }
    (if n == 0 { 0 } else { used }, search.colors)
}

fn solve_connected(g: &Graph) -> (u32, Vec<u32>) {
    let n = g.vertex_count();
    if n == 0 {
        return (0, Vec::new());
    }
    if g.edge_count() == 0 {
        return (1, vec![1; n]);
    }
    let lower = greedy_clique_size(g).max(2);
    let (upper, greedy) = dsatur_greedy(g);
    if lower >= upper {
        return (upper, greedy);
    }
    for k in lower..upper {
        let mut search = KColorSearch::new(g, k);
        if search.solve(0) {
            return (k, search.colors);
        }
    }
    (upper, greedy)
}

/// Exact chromatic number with one optimal coloring, solved per
/// connected component.
pub fn optimal_coloring(g: &Graph) -> (u32, Coloring) {
    let mut colors = vec![0u32; g.vertex_count()];
    let mut best = 0u32;
    for block in g.components().blocks() {
        let (piece, map) = g.induced(block).expect("component vertices are in range");
        let (k, piece_colors) = solve_connected(&piece);
        best = best.max(k);
        for (i, &orig) in map.iter().enumerate() {
            colors[orig] = piece_colors[i];
        }
    }
    let coloring = Coloring::new(colors, best).expect("solver emits palette colors");
    (best, coloring)
}

/// Exact chromatic number: 0 for the vertexless graph, 1 for a nonempty
/// edgeless one.
pub fn chromatic_number(g: &Graph) -> u32 {
    optimal_coloring(g).0
}

/// A proper coloring with at most `k` colors, if one exists. The search
/// is deterministic for a fixed graph encoding.
pub fn is_k_colorable(g: &Graph, k: u32) -> Option<Coloring> {
    let n = g.vertex_count();
    if n == 0 {
        return Some(Coloring::new(Vec::new(), k).expect("empty coloring"));
    }
    if k == 0 {
        return None;
    }
    let mut colors = vec![0u32; n];
    for block in g.components().blocks() {
        let (piece, map) = g.induced(block).expect("component vertices are in range");
        if piece.edge_count() == 0 {
            for &orig in &map {
                colors[orig] = 1;
            }
            continue;
        }
        let mut search = KColorSearch::new(&piece, k);
        if !search.solve(0) {
            return None;
        }
        for (i, &orig) in map.iter().enumerate() {
            colors[orig] = search.colors[i];
        }
    }
    Some(Coloring::new(colors, k).expect("search emits palette colors"))
}

/// Outcome of a compatibility check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Compatibility {
    Compatible,
    /// First edge of the parent outside the subgraph where the pair
    /// condition fails.
    Violation { edge: (usize, usize) },
}

/// Checks the pair condition for `f`, `g` on the edges of the parent
/// missing from `h`. Both colorings must be proper on `h`; an improper
/// input is an error, distinct from an incompatible pair.
pub fn check_compatible(
    h: &SpanningSubgraph,
    f: &Coloring,
    g: &Coloring,
) -> Result<Compatibility, ChromaticError> {
    let n = h.vertex_count();
    for (label, coloring) in [("first", f), ("second", g)] {
        if coloring.vertex_count() != n {
            return Err(ChromaticError::VertexCountMismatch {
                expected: n,
                got: coloring.vertex_count(),
            });
        }
        if let Some(edge) = h
            .edges()
            .iter()
            .find(|&&(u, v)| coloring.color(u) == coloring.color(v))
        {
            return Err(ChromaticError::NotProper { label, edge: *edge });
        }
    }
    for (u, v) in h.complement_edges() {
        if f.color(u) == g.color(v) || f.color(v) == g.color(u) {
            return Ok(Compatibility::Violation { edge: (u, v) });
        }
    }
    Ok(Compatibility::Compatible)
}

/// Joint backtracking search for a compatible pair with palette `k`.
/// Color permutations act on pairs diagonally, so `f` may be restricted
/// to canonical colorings (first use of color i precedes first use of
/// i+1) while `g` ranges freely.
struct PairSearch<'a> {
    k: u32,
    f: Vec<u32>,
    g: Vec<u32>,
    h_before: &'a [Vec<usize>],
    comp_before: &'a [Vec<usize>],
}

impl<'a> PairSearch<'a> {
    fn solve(&mut self, v: usize, f_max: u32) -> bool {
        if v == self.f.len() {
            return true;
        }
        let f_limit = self.k.min(f_max + 1);
        for fc in 1..=f_limit {
            if self.h_before[v].iter().any(|&u| self.f[u] == fc) {
                continue;
            }
            if self.comp_before[v].iter().any(|&u| self.g[u] == fc) {
                continue;
            }
            self.f[v] = fc;
            for gc in 1..=self.k {
                if self.h_before[v].iter().any(|&u| self.g[u] == gc) {
                    continue;
                }
                if self.comp_before[v].iter().any(|&u| self.f[u] == gc) {
                    continue;
                }
                self.g[v] = gc;
                if self.solve(v + 1, f_max.max(fc)) {
                    return true;
                }
            }
            self.g[v] = 0;
        }
        self.f[v] = 0;
        false
    }
}

fn compatible_pair_with_palette(
    h: &SpanningSubgraph,
    k: u32,
) -> Option<(Coloring, Coloring)> {
    let n = h.vertex_count();
    let mut h_before = vec![Vec::new(); n];
    let mut comp_before = vec![Vec::new(); n];
    for &(u, v) in h.edges() {
        h_before[v].push(u);
    }
    for (u, v) in h.complement_edges() {
        comp_before[v].push(u);
    }
    let mut search = PairSearch {
        k,
        f: vec![0; n],
        g: vec![0; n],
        h_before: &h_before,
        comp_before: &comp_before,
    };
    if search.solve(0, 0) {
        let f = Coloring::new(search.f, k).expect("palette colors");
        let g = Coloring::new(search.g, k).expect("palette colors");
        Some((f, g))
    } else {
        None
    }
}

/// Smallest palette admitting a compatible pair of colorings proper on
/// `h`, with one witness pair.
pub fn chi_rel_direct_with_pair(h: &SpanningSubgraph) -> (u32, Coloring, Coloring) {
    let n = h.vertex_count();
    if n == 0 {
        let empty = Coloring::new(Vec::new(), 0).expect("empty coloring");
        return (0, empty.clone(), empty);
    }
    let mut k = greedy_clique_size(&h.as_graph()).max(1);
    if !h.complement_edges().is_empty() {
        k = k.max(2);
    }
    loop {
        if let Some((f, g)) = compatible_pair_with_palette(h, k) {
            debug_assert!(matches!(
                check_compatible(h, &f, &g),
                Ok(Compatibility::Compatible)
            ));
            return (k, f, g);
        }
        k += 1;
    }
}

/// Smallest palette admitting a compatible pair of colorings of `h`.
pub fn chi_rel_direct(h: &SpanningSubgraph) -> u32 {
    chi_rel_direct_with_pair(h).0
}

/// The same number obtained by coloring the derived double cover whose
/// +1 edges are exactly `h`.
pub fn chi_rel_via_cover(h: &SpanningSubgraph) -> u32 {
    let cover = derive_double_cover(&signing_from_cosupport(h));
    chromatic_number(cover.graph())
}

/// Outcome of a sheet-tuple compatibility check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TupleCompatibility {
    Compatible,
    Violation { edge: (usize, usize), sheet: usize },
}

/// Checks an n-tuple of colorings of the voltage's cosupport H: for each
/// directed edge (u, v) of the base outside H and each sheet i, the
/// color of u on sheet i must differ from the color of v on the sheet
/// the edge voltage sends i to.
pub fn check_compatible_tuple(
    voltage: &PermutationVoltage,
    colorings: &[Coloring],
) -> Result<TupleCompatibility, ChromaticError> {
    if colorings.len() != voltage.fold() {
        return Err(ChromaticError::TupleSizeMismatch {
            expected: voltage.fold(),
            got: colorings.len(),
        });
    }
    let h = voltage.cosupport();
    let n = h.vertex_count();
    for coloring in colorings {
        if coloring.vertex_count() != n {
            return Err(ChromaticError::VertexCountMismatch {
                expected: n,
                got: coloring.vertex_count(),
            });
        }
        if let Some(edge) = h
            .edges()
            .iter()
            .find(|&&(u, v)| coloring.color(u) == coloring.color(v))
        {
            return Err(ChromaticError::NotProper {
                label: "tuple",
                edge: *edge,
            });
        }
    }
    for (i, &(u, v)) in voltage.base().edges().iter().enumerate() {
        let p = &voltage.voltages()[i];
        if p.is_identity() {
            continue;
        }
        let q = p.inverse();
        for sheet in 0..voltage.fold() {
            if colorings[sheet].color(u) == colorings[p.apply(sheet)].color(v) {
                return Ok(TupleCompatibility::Violation {
                    edge: (u, v),
                    sheet,
                });
            }
            if colorings[sheet].color(v) == colorings[q.apply(sheet)].color(u) {
                return Ok(TupleCompatibility::Violation {
                    edge: (v, u),
                    sheet,
                });
            }
        }
    }
    Ok(TupleCompatibility::Compatible)
}

/// Smallest palette admitting a compatible sheet tuple, together with
/// the tuple recovered from an optimal coloring of the derived cover:
/// the i-th coloring of a base vertex is the cover color of its sheet-i
/// lift.
pub fn chi_rel_nfold_with_tuple(voltage: &PermutationVoltage) -> (u32, Vec<Coloring>) {
    let cover = derive_nfold_cover(voltage);
    let (k, cover_coloring) = optimal_coloring(cover.graph());
    let fold = voltage.fold();
    let n = voltage.base().vertex_count();
    let mut tuple = Vec::with_capacity(fold);
    for sheet in 0..fold {
        let colors = (0..n)
            .map(|v| cover_coloring.color(fold * v + sheet))
            .collect();
        tuple.push(Coloring::new(colors, k).expect("cover colors stay in palette"));
    }
    debug_assert!(matches!(
        check_compatible_tuple(voltage, &tuple),
        Ok(TupleCompatibility::Compatible)
    ));
    (k, tuple)
}

pub fn chi_rel_nfold(voltage: &PermutationVoltage) -> u32 {
    chi_rel_nfold_with_tuple(voltage).0
}

/// Visits proper colorings of `g` that use exactly `k` colors, one per
/// color-permutation class (colors appear in first-use order). Returns
/// true when the enumeration completed without hitting `cap`.
pub fn visit_exact_colorings<F>(g: &Graph, k: u32, cap: usize, visit: &mut F) -> bool
where
    F: FnMut(&[u32]),
{
    fn recurse<F: FnMut(&[u32])>(
        g: &Graph,
        k: u32,
        colors: &mut Vec<u32>,
        v: usize,
        max_used: u32,
        remaining_cap: &mut usize,
        visit: &mut F,
    ) -> bool {
        let n = g.vertex_count();
        if v == n {
            if max_used == k {
                if *remaining_cap == 0 {
                    return false;
                }
                *remaining_cap -= 1;
                visit(colors);
            }
            return true;
        }
        // Not enough vertices left to introduce the missing colors.
        if (k - max_used) as usize > n - v {
            return true;
        }
        let limit = k.min(max_used + 1);
        for c in 1..=limit {
            if g.neighbors(v).iter().any(|&u| u < v && colors[u] == c) {
                continue;
            }
            colors[v] = c;
            if !recurse(g, k, colors, v + 1, max_used.max(c), remaining_cap, visit) {
                return false;
            }
            colors[v] = 0;
        }
        true
    }

    let n = g.vertex_count();
    if k == 0 {
        if n == 0 {
            visit(&[]);
        }
        return true;
    }
    let mut colors = vec![0u32; n];
    let mut remaining_cap = cap;
    recurse(g, k, &mut colors, 0, 0, &mut remaining_cap, visit)
}
