//! Closed-form bounds and characterizations for the relative chromatic
//! number, evaluated exactly on explicit instances.
//!
//! Several bounds minimize or maximize over exponentially many objects
//! (switching-class members, optimal colorings, respectful colorings).
//! Every enumerated candidate yields a valid bound on its own, so the
//! evaluators take an explicit budget: truncation can only loosen the
//! reported bound, never invalidate it. Reports carry an `exhaustive`
//! flag saying whether anything was cut off.

use crate::chromatic::{
    chi_rel_direct, chromatic_number, visit_exact_colorings, ChromaticError, Coloring,
};
use crate::graph::{Graph, GraphError, Partition, SpanningSubgraph};
use crate::switching::{are_switching_equivalent, seidel_switch, SwitchingError};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BoundsError {
    #[error("the multiset may not be empty")]
    EmptyMultiset,
    #[error("parent graph must be connected")]
    ParentDisconnected,
    #[error("parent graph must have at least one edge")]
    ParentEdgeless,
    #[error("target {target} is outside 2..={chi}")]
    TargetOutOfRange { target: u32, chi: u32 },
    #[error("parent graph is not complete")]
    ParentNotComplete,
    #[error("subgraph is not complete multipartite with at least two parts")]
    NotCompleteMultipartite,
    #[error("quotient graph is not bipartite")]
    QuotientNotBipartite,
    #[error("constructed subgraph realizes {got}, expected {expected}")]
    RealizationMismatch { expected: u32, got: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Chromatic(#[from] ChromaticError),
    #[error(transparent)]
    Switching(#[from] SwitchingError),
}

/// `max(0, 2 * max(s) - sum(s))`: how far the largest entry exceeds the
/// sum of the others, clamped at zero.
pub fn dominance_excess(s: &[u32]) -> Result<u32, BoundsError> {
    if s.is_empty() {
        return Err(BoundsError::EmptyMultiset);
    }
    let max = *s.iter().max().expect("nonempty");
    let sum: u32 = s.iter().sum();
    Ok((2 * max).saturating_sub(sum))
}

/// Number of nonempty color classes of `f` that are independent in the
/// complement of `h` within its parent (and hence independent in the
/// parent, since `f` is proper on `h`).
pub fn independent_color_count(
    h: &SpanningSubgraph,
    f: &Coloring,
) -> Result<u32, BoundsError> {
    if f.vertex_count() != h.vertex_count() {
        return Err(ChromaticError::VertexCountMismatch {
            expected: h.vertex_count(),
            got: f.vertex_count(),
        }
        .into());
    }
    if let Some(&edge) = h
        .edges()
        .iter()
        .find(|&&(u, v)| f.color(u) == f.color(v))
    {
        return Err(ChromaticError::NotProper {
            label: "first",
            edge,
        }
        .into());
    }
    Ok(count_independent_classes(
        f.colors(),
        f.palette(),
        &h.complement_edges(),
    ))
}

fn count_independent_classes(
    colors: &[u32],
    palette: u32,
    complement_edges: &[(usize, usize)],
) -> u32 {
    let k = palette as usize;
    let mut nonempty = vec![false; k + 1];
    for &c in colors {
        nonempty[c as usize] = true;
    }
    let mut dependent = vec![false; k + 1];
    for &(u, v) in complement_edges {
        if colors[u] == colors[v] {
            dependent[colors[u] as usize] = true;
        }
    }
    (1..=k).filter(|&c| nonempty[c] && !dependent[c]).count() as u32
}

/// A lower/upper bracket with provenance of how it was enumerated.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundsReport {
    pub lower: u32,
    pub upper: u32,
    pub exhaustive: bool,
    pub seed: u64,
}

/// Switching-class bracket: the lower bound is the largest chromatic
/// number over enumerated class members K, the upper bound the smallest
/// of chi(G) and 2 chi(K) - I_f over members K and their optimal
/// colorings f. Class members are enumerated exhaustively when
/// 2^(n-1) fits the budget, else from a seeded sample that always
/// includes the subgraph itself.
pub fn bounds_cor24(h: &SpanningSubgraph, class_budget: usize, seed: u64) -> BoundsReport {
    let g = h.parent();
    let n = g.vertex_count();
    let chi_parent = chromatic_number(g);
    let budget = class_budget.max(1);

    let free = n.saturating_sub(1);
    let exhaustive_classes = free < 63 && (1usize << free) <= budget;
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    if exhaustive_classes {
        for mask in 0..(1u64 << free) {
            subsets.push(
                (0..free)
                    .filter(|&b| mask >> b & 1 == 1)
                    .map(|b| b + 1)
                    .collect(),
            );
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        subsets.push(Vec::new());
        for _ in 1..budget {
            let subset = (0..n).filter(|_| rng.gen::<bool>()).collect();
            subsets.push(subset);
        }
    }

    let mut seen_members = BTreeSet::new();
    let mut lower = 0u32;
    let mut upper = chi_parent;
    let mut colorings_exhaustive = true;
    for subset in subsets {
        let member = seidel_switch(h, &subset).expect("subset is in range");
        if !seen_members.insert(member.edges().to_vec()) {
            continue;
        }
        let member_graph = member.as_graph();
        let chi_member = chromatic_number(&member_graph);
        lower = lower.max(chi_member);
        let complement_edges = member.complement_edges();
        let mut best_independent = 0u32;
        let exhausted = visit_exact_colorings(&member_graph, chi_member, budget, &mut |colors| {
            let count = count_independent_classes(colors, chi_member, &complement_edges);
            best_independent = best_independent.max(count);
        });
        colorings_exhaustive &= exhausted;
        upper = upper.min(2 * chi_member - best_independent);
    }
    BoundsReport {
        lower,
        upper,
        exhaustive: exhaustive_classes && colorings_exhaustive,
        seed,
    }
}

/// An upper bound with a record of whether its minimization ran to
/// completion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct UpperReport {
    pub value: u32,
    pub exhaustive: bool,
}

/// Quotient-coloring upper bound. The complement's components partition
/// the vertex set; an optimal coloring c of the quotient of `h` by that
/// partition groups the blocks into parts. Writing chi_i for the
/// chromatic numbers of the induced parts, both
/// `sum chi_i + excess({chi_i})` and
/// `sum chi_i + min_f excess({D_f(i)})`
/// bound the relative chromatic number from above, where f ranges over
/// colorings that split into per-part optimal colorings with disjoint
/// palettes and D_f(i) counts the part-i classes not independent in the
/// complement. The minimum over enumerated colorings c and choices of f
/// is returned; truncation by the budget keeps the result a valid bound.
pub fn upper_thm31(h: &SpanningSubgraph, search_budget: usize) -> UpperReport {
    let n = h.vertex_count();
    if n == 0 {
        return UpperReport {
            value: 0,
            exhaustive: true,
        };
    }
    let budget = search_budget.max(1);
    let h_graph = h.as_graph();
    let complement = h.complement_within();
    let blocks = complement.as_graph().components();
    let quotient = h_graph
        .quotient(&blocks)
        .expect("component blocks partition the vertex set");
    let q = chromatic_number(&quotient);
    let block_of = blocks.block_index_map();

    let mut quotient_colorings = Vec::new();
    let mut exhaustive = visit_exact_colorings(&quotient, q, budget, &mut |c| {
        quotient_colorings.push(c.to_vec())
    });

    let mut best: Option<u32> = None;
    for c in quotient_colorings {
        let mut part_vertices = vec![Vec::new(); q as usize];
        for v in 0..n {
            part_vertices[(c[block_of[v]] - 1) as usize].push(v);
        }
        let mut part_chis = Vec::with_capacity(q as usize);
        let mut deficit_options: Vec<Vec<u32>> = Vec::with_capacity(q as usize);
        for verts in &part_vertices {
            let (part_graph, map) = h_graph.induced(verts).expect("part vertices in range");
            let chi_part = chromatic_number(&part_graph);
            part_chis.push(chi_part);
            // Complement edges internal to this part, in local labels.
            let mut local = vec![usize::MAX; n];
            for (i, &orig) in map.iter().enumerate() {
                local[orig] = i;
            }
            let local_complement: Vec<(usize, usize)> = complement
                .edges()
                .iter()
                .filter(|&&(u, v)| local[u] != usize::MAX && local[v] != usize::MAX)
                .map(|&(u, v)| (local[u], local[v]))
                .collect();
            let mut deficits = BTreeSet::new();
            let exhausted = visit_exact_colorings(&part_graph, chi_part, budget, &mut |colors| {
                let independent = count_independent_classes(colors, chi_part, &local_complement);
                deficits.insert(chi_part - independent);
            });
            exhaustive &= exhausted;
            deficit_options.push(deficits.into_iter().collect());
        }
        let total: u32 = part_chis.iter().sum();
        let route_one = total + dominance_excess(&part_chis).expect("at least one part");

        let (min_excess, combos_exhausted) = minimize_excess(&deficit_options, budget);
        exhaustive &= combos_exhausted;
        let route_two = total + min_excess;

        let value = route_one.min(route_two);
        best = Some(best.map_or(value, |b| b.min(value)));
    }
    UpperReport {
        value: best.expect("the quotient admits an optimal coloring"),
        exhaustive,
    }
}

/// Minimum dominance excess over one choice from each option list,
/// visiting at most `budget` combinations.
fn minimize_excess(options: &[Vec<u32>], budget: usize) -> (u32, bool) {
    fn recurse(
        options: &[Vec<u32>],
        depth: usize,
        chosen: &mut Vec<u32>,
        remaining: &mut usize,
        best: &mut u32,
    ) -> bool {
        if depth == options.len() {
            if *remaining == 0 {
                return false;
            }
            *remaining -= 1;
            let excess = dominance_excess(chosen).expect("nonempty choice");
            *best = (*best).min(excess);
            return true;
        }
        for &d in &options[depth] {
            chosen.push(d);
            let complete = recurse(options, depth + 1, chosen, remaining, best);
            chosen.pop();
            if !complete {
                return false;
            }
        }
        true
    }
    let mut best = u32::MAX;
    let mut remaining = budget.max(1);
    let mut chosen = Vec::with_capacity(options.len());
    let exhausted = recurse(options, 0, &mut chosen, &mut remaining, &mut best);
    (best, exhausted)
}

/// The spanning subgraph formed by the parent edges internal to the
/// partition's blocks: the disjoint union of the induced subgraphs.
pub fn induced_union(g: &Graph, p: &Partition) -> Result<SpanningSubgraph, BoundsError> {
    if p.vertex_count() != g.vertex_count() {
        return Err(GraphError::InvalidPartition(format!(
            "partition covers {} vertices, graph has {}",
            p.vertex_count(),
            g.vertex_count()
        ))
        .into());
    }
    let block_of = p.block_index_map();
    let edges: Vec<_> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| block_of[u] == block_of[v])
        .copied()
        .collect();
    Ok(SpanningSubgraph::new(g.clone(), &edges).expect("edges come from the parent"))
}

/// Two-sided bound for the induced-union subgraph of a partition: over
/// pairs of blocks adjacent in the quotient, the chromatic number of the
/// induced pair union bounds from below and the sum of the per-block
/// chromatic numbers from above. When the quotient has no edges the
/// subgraph is the whole parent and both bounds collapse to its
/// chromatic number.
pub fn bounds_thm34(g: &Graph, p: &Partition) -> Result<(u32, u32), BoundsError> {
    let h = induced_union(g, p)?;
    let quotient = g.quotient(p)?;
    if quotient.edge_count() == 0 {
        let chi = chromatic_number(&h.as_graph());
        return Ok((chi, chi));
    }
    let block_chis: Vec<u32> = p
        .blocks()
        .iter()
        .map(|b| chromatic_number(&g.induced(b).expect("block in range").0))
        .collect();
    let mut lower = 0u32;
    let mut upper = 0u32;
    for &(i, j) in quotient.edges() {
        let mut joint = p.blocks()[i].clone();
        joint.extend_from_slice(&p.blocks()[j]);
        let (joint_graph, _) = g.induced(&joint).expect("blocks in range");
        lower = lower.max(chromatic_number(&joint_graph));
        upper = upper.max(block_chis[i] + block_chis[j]);
    }
    Ok((lower, upper))
}

/// Result of the bipartite-quotient criterion.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BipartiteQuotientReport {
    pub chi_parent: u32,
    pub chi_rel: u32,
    /// Block-pair sandwich around `chi_parent`, absent when the quotient
    /// has no edges.
    pub sandwich: Option<(u32, u32)>,
}

impl BipartiteQuotientReport {
    pub fn equality_holds(&self) -> bool {
        self.chi_parent == self.chi_rel
    }

    pub fn sandwich_holds(&self) -> bool {
        match self.sandwich {
            None => true,
            Some((lo, hi)) => lo <= self.chi_parent && self.chi_parent <= hi,
        }
    }
}

/// When the quotient of a connected parent by a partition is bipartite,
/// the chromatic number of the parent equals the relative chromatic
/// number of the induced-union subgraph; both are computed independently
/// and compared, along with the block-pair sandwich around chi(G).
pub fn bipartite_quotient_equality(
    g: &Graph,
    p: &Partition,
) -> Result<BipartiteQuotientReport, BoundsError> {
    let quotient = g.quotient(p)?;
    if !quotient.is_bipartite() {
        return Err(BoundsError::QuotientNotBipartite);
    }
    let h = induced_union(g, p)?;
    let chi_parent = chromatic_number(g);
    let chi_rel = chi_rel_direct(&h);
    let sandwich = if quotient.edge_count() == 0 {
        None
    } else {
        Some(bounds_thm34(g, p)?)
    };
    Ok(BipartiteQuotientReport {
        chi_parent,
        chi_rel,
        sandwich,
    })
}

/// Whether the relative chromatic number of `h` is exactly 2: true iff
/// the (connected, non-edgeless) parent is bipartite or `h` switches to
/// the edgeless spanning subgraph.
pub fn characterize_chi2(h: &SpanningSubgraph) -> Result<bool, BoundsError> {
    let g = h.parent();
    if !g.is_connected() {
        return Err(BoundsError::ParentDisconnected);
    }
    if g.edge_count() == 0 {
        return Err(BoundsError::ParentEdgeless);
    }
    if g.is_bipartite() {
        return Ok(true);
    }
    let null = SpanningSubgraph::null(g.clone());
    Ok(are_switching_equivalent(h, &null)?.is_some())
}

/// A spanning subgraph together with its verified relative chromatic
/// number.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Realization {
    pub subgraph: SpanningSubgraph,
    pub chi_rel: u32,
}

/// Builds a spanning subgraph of a connected parent whose relative
/// chromatic number is exactly `target`, for any target between 2 and
/// chi(G).
///
/// Vertices are deleted greedily (lowest removable index first) while
/// the induced subgraph on the survivors still needs `target` colors;
/// once no single deletion survives, the survivor set W induces a graph
/// needing exactly `target` colors, and dropping the lowest vertex of W
/// leaves an induced subgraph J with chi(J) = target - 1. The answer is
/// J plus isolated vertices: for the partition {V(J)} plus singletons,
/// the block-pair bounds pin its relative chromatic number to exactly
/// `target`. The construction is re-verified against the direct search
/// before returning.
pub fn realize_chi_rel(g: &Graph, target: u32) -> Result<Realization, BoundsError> {
    if !g.is_connected() {
        return Err(BoundsError::ParentDisconnected);
    }
    let chi = chromatic_number(g);
    if target < 2 || target > chi {
        return Err(BoundsError::TargetOutOfRange { target, chi });
    }
    let mut surviving: Vec<usize> = g.vertices().collect();
    loop {
        let mut removed = false;
        for i in 0..surviving.len() {
            let mut candidate = surviving.clone();
            candidate.remove(i);
            let (induced, _) = g.induced(&candidate).expect("candidate in range");
            if chromatic_number(&induced) >= target {
                surviving = candidate;
                removed = true;
                break;
            }
        }
        if !removed {
            break;
        }
    }
    debug_assert_eq!(
        chromatic_number(&g.induced(&surviving).expect("in range").0),
        target
    );
    let keep_set: BTreeSet<usize> = surviving[1..].iter().copied().collect();
    let edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| keep_set.contains(&u) && keep_set.contains(&v))
        .copied()
        .collect();
    let subgraph = SpanningSubgraph::new(g.clone(), &edges).expect("edges come from the parent");
    let achieved = chi_rel_direct(&subgraph);
    if achieved != target {
        return Err(BoundsError::RealizationMismatch {
            expected: target,
            got: achieved,
        });
    }
    Ok(Realization {
        subgraph,
        chi_rel: achieved,
    })
}

/// For a complete multipartite spanning subgraph of a complete graph,
/// the relative chromatic number is the number of parts; recognized
/// structurally (the complement must split into at least two complete
/// components) and answered without search.
pub fn chi_rel_complete_multipartite(h: &SpanningSubgraph) -> Result<u32, BoundsError> {
    let g = h.parent();
    let n = g.vertex_count();
    if g.edge_count() != n * n.saturating_sub(1) / 2 {
        return Err(BoundsError::ParentNotComplete);
    }
    let complement = h.complement_within().as_graph();
    let parts = complement.components();
    if parts.block_count() < 2 {
        // The one-part case is the edgeless subgraph, whose relative
        // chromatic number is 2, not 1; it is excluded here.
        return Err(BoundsError::NotCompleteMultipartite);
    }
    for block in parts.blocks() {
        let (piece, _) = complement.induced(block).expect("block in range");
        let b = block.len();
        if piece.edge_count() != b * (b - 1) / 2 {
            return Err(BoundsError::NotCompleteMultipartite);
        }
    }
    Ok(parts.block_count() as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chromatic::chi_rel_direct;

    fn diamond() -> Graph {
        Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    fn clique_with_isolated(n: usize, clique: usize) -> SpanningSubgraph {
        let mut edges = Vec::new();
        for u in 0..clique {
            for v in (u + 1)..clique {
                edges.push((u, v));
            }
        }
        SpanningSubgraph::new(Graph::complete(n), &edges).unwrap()
    }

    #[test]
    fn dominance_excess_values() {
        assert_eq!(dominance_excess(&[1]), Ok(1));
        assert_eq!(dominance_excess(&[1, 1]), Ok(0));
        assert_eq!(dominance_excess(&[1, 1, 1, 1]), Ok(0));
        assert_eq!(dominance_excess(&[3, 1]), Ok(2));
        assert_eq!(dominance_excess(&[]), Err(BoundsError::EmptyMultiset));
    }

    #[test]
    fn dominance_excess_shrinks_when_small_entries_join() {
        for max in 1..=5u32 {
            for extra in 1..=max {
                let base = vec![max, 2];
                let mut grown = base.clone();
                grown.push(extra);
                assert!(dominance_excess(&grown).unwrap() <= dominance_excess(&base).unwrap());
            }
        }
    }

    #[test]
    fn independent_count_examples() {
        // On the whole parent the complement is edgeless, so every used
        // color counts.
        let g = diamond();
        let full = SpanningSubgraph::full(g.clone());
        let f = Coloring::new(vec![1, 2, 3, 3], 3).unwrap();
        assert_eq!(independent_color_count(&full, &f), Ok(3));

        // K3 plus two isolated vertices in K5, all isolated vertices
        // sharing color 1: only the two singleton classes survive.
        let h = clique_with_isolated(5, 3);
        let f = Coloring::new(vec![1, 2, 3, 1, 1], 3).unwrap();
        assert_eq!(independent_color_count(&h, &f), Ok(2));

        // Singleton classes always count.
        let f = Coloring::new(vec![1, 2, 3, 4, 5], 5).unwrap();
        assert_eq!(independent_color_count(&h, &f), Ok(5));

        // Improper input is an error.
        let bad = Coloring::new(vec![1, 1, 2, 3, 3], 3).unwrap();
        assert!(independent_color_count(&h, &bad).is_err());
    }

    #[test]
    fn cor24_is_forced_to_equality_on_the_full_subgraph() {
        let g = diamond();
        let full = SpanningSubgraph::full(g);
        let report = bounds_cor24(&full, 64, 1);
        assert!(report.exhaustive);
        assert_eq!(report.lower, 3);
        assert_eq!(report.upper, 3);
    }

    #[test]
    fn cor24_brackets_clique_with_isolated() {
        for n in 3..=6usize {
            for m in 2..=n {
                let h = clique_with_isolated(n, m - 1);
                let report = bounds_cor24(&h, 64, 1);
                let truth = chi_rel_direct(&h);
                assert_eq!(truth, m as u32);
                assert!(report.lower >= m as u32, "switched clique gives the floor");
                assert!(report.lower <= truth && truth <= report.upper);
            }
        }
    }

    #[test]
    fn cor24_brackets_the_star_subgraph() {
        let g = diamond();
        let claw = SpanningSubgraph::new(g, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let report = bounds_cor24(&claw, 64, 7);
        assert!(report.lower <= 2 && 2 <= report.upper);
        assert_eq!(report.seed, 7);
    }

    #[test]
    fn thm31_matches_clique_with_isolated_exactly() {
        for n in 2..=6usize {
            for m in 2..=n {
                let h = clique_with_isolated(n, m - 1);
                let report = upper_thm31(&h, 100_000);
                assert_eq!(report.value, m as u32, "n={n} m={m}");
                assert!(report.exhaustive);
            }
        }
    }

    #[test]
    fn thm31_is_an_upper_bound_on_all_diamond_subgraphs() {
        let g = diamond();
        for mask in 0..32u64 {
            let h = SpanningSubgraph::from_edge_mask(g.clone(), mask).unwrap();
            let report = upper_thm31(&h, 10_000);
            assert!(report.value >= chi_rel_direct(&h), "mask {mask:b}");
        }
    }

    #[test]
    fn thm34_examples() {
        // Complete components inside a complete parent: both sides meet
        // at the sum of the two largest orders.
        let p = Partition::new(5, vec![vec![0, 1, 2], vec![3, 4]]).unwrap();
        let g = Graph::complete(5);
        let (lower, upper) = bounds_thm34(&g, &p).unwrap();
        assert_eq!((lower, upper), (5, 5));
        let h = induced_union(&g, &p).unwrap();
        assert_eq!(chi_rel_direct(&h), 5);

        // Single-block partition degenerates to the parent itself.
        let whole = Partition::single_block(4);
        let d = diamond();
        assert_eq!(bounds_thm34(&d, &whole).unwrap(), (3, 3));
    }

    #[test]
    fn thm34_brackets_on_all_partitions_of_the_diamond() {
        let g = diamond();
        for p in crate::enumerate::set_partitions(4) {
            let (lower, upper) = bounds_thm34(&g, &p).unwrap();
            let truth = chi_rel_direct(&induced_union(&g, &p).unwrap());
            assert!(lower <= truth && truth <= upper, "{p:?}");
        }
    }

    #[test]
    fn bipartite_quotient_forces_equality() {
        // K4 quotiented by two pairs gives K2.
        let g = Graph::complete(4);
        let p = Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap();
        let report = bipartite_quotient_equality(&g, &p).unwrap();
        assert_eq!(report.chi_parent, 4);
        assert_eq!(report.chi_rel, 4);
        assert!(report.equality_holds());
        assert!(report.sandwich_holds());

        // Opposite pairs of a hexagon quotient to a triangle.
        let c6 = Graph::cycle(6);
        let opposite = Partition::new(6, vec![vec![0, 3], vec![1, 4], vec![2, 5]]).unwrap();
        assert_eq!(
            bipartite_quotient_equality(&c6, &opposite),
            Err(BoundsError::QuotientNotBipartite)
        );

        // A split of a bipartite parent with a bipartite quotient.
        let p = Partition::new(6, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
        assert!(c6.quotient(&p).unwrap().is_bipartite());
        let report = bipartite_quotient_equality(&c6, &p).unwrap();
        assert!(report.equality_holds());
        assert!(report.sandwich_holds());
    }

    #[test]
    fn chi2_characterization_on_the_diamond() {
        let g = diamond();
        let null = SpanningSubgraph::null(g.clone());
        assert_eq!(characterize_chi2(&null), Ok(true));
        let paw = SpanningSubgraph::new(g.clone(), &[(0, 1), (0, 2), (1, 2), (1, 3)]).unwrap();
        assert_eq!(characterize_chi2(&paw), Ok(false));
        assert_eq!(chi_rel_direct(&paw), 3);

        // Bipartite parents make every subgraph 2-realizable.
        let c4 = Graph::cycle(4);
        for mask in 0..16u64 {
            let h = SpanningSubgraph::from_edge_mask(c4.clone(), mask).unwrap();
            assert_eq!(characterize_chi2(&h), Ok(true));
            assert_eq!(chi_rel_direct(&h), 2);
        }
    }

    #[test]
    fn chi2_characterization_preconditions() {
        let disconnected = Graph::new(4, &[(0, 1)]).unwrap();
        let h = SpanningSubgraph::null(disconnected);
        assert_eq!(characterize_chi2(&h), Err(BoundsError::ParentDisconnected));
        let edgeless = SpanningSubgraph::null(Graph::empty(1));
        assert_eq!(
            characterize_chi2(&edgeless),
            Err(BoundsError::ParentEdgeless)
        );
    }

    #[test]
    fn realize_targets_across_complete_graphs() {
        for n in 2..=6usize {
            let g = Graph::complete(n);
            for target in 2..=n as u32 {
                let r = realize_chi_rel(&g, target).unwrap();
                assert_eq!(r.chi_rel, target);
                // On a complete parent the survivors form a clique, so
                // the result is a clique plus isolated vertices.
                assert_eq!(
                    r.subgraph.edge_count() as u32,
                    (target - 1) * (target - 2) / 2
                );
            }
        }
    }

    #[test]
    fn realize_covers_the_whole_range_on_assorted_graphs() {
        let cases = [
            diamond(),
            Graph::cycle(5),
            Graph::cycle(7),
            Graph::complete(5),
            Graph::new(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap(),
        ];
        for g in cases {
            let chi = chromatic_number(&g);
            for target in 2..=chi {
                let r = realize_chi_rel(&g, target).unwrap();
                assert_eq!(r.chi_rel, target);
            }
            assert_eq!(
                realize_chi_rel(&g, chi + 1),
                Err(BoundsError::TargetOutOfRange {
                    target: chi + 1,
                    chi
                })
            );
        }
    }

    #[test]
    fn complete_multipartite_shortcut() {
        // Complete bipartite 2+3 inside K5.
        let g = Graph::complete(5);
        let mut edges = Vec::new();
        for &u in &[0, 1] {
            for &v in &[2, 3, 4] {
                edges.push((u, v));
            }
        }
        let h = SpanningSubgraph::new(g, &edges).unwrap();
        assert_eq!(chi_rel_complete_multipartite(&h), Ok(2));
        assert_eq!(chi_rel_direct(&h), 2);

        // K3 is complete 3-partite with singleton parts.
        let k3 = SpanningSubgraph::full(Graph::complete(3));
        assert_eq!(chi_rel_complete_multipartite(&k3), Ok(3));

        // Complete bipartite 2+2 inside K4, cross-checked by search.
        let g = Graph::complete(4);
        let h = SpanningSubgraph::new(g, &[(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert_eq!(chi_rel_complete_multipartite(&h), Ok(2));
        assert_eq!(chi_rel_direct(&h), 2);
    }

    #[test]
    fn complete_multipartite_rejections() {
        let d = SpanningSubgraph::full(diamond());
        assert_eq!(
            chi_rel_complete_multipartite(&d),
            Err(BoundsError::ParentNotComplete)
        );
        // A path inside K3 is not complete multipartite.
        let h = SpanningSubgraph::new(Graph::complete(3), &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(
            chi_rel_complete_multipartite(&h),
            Err(BoundsError::NotCompleteMultipartite)
        );
        // The edgeless subgraph is one-part and excluded.
        let null = SpanningSubgraph::null(Graph::complete(3));
        assert_eq!(
            chi_rel_complete_multipartite(&null),
            Err(BoundsError::NotCompleteMultipartite)
        );
    }
}
