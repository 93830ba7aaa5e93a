//! Seidel switching of spanning subgraphs and of signings, a linear-time
//! equivalence decision, and switching-class enumeration.
//!
//! Switching a subgraph by a vertex set X keeps adjacency inside X and
//! inside its complement, and complements it (within the parent) across
//! the cut. Two subgraphs are switching equivalent exactly when their
//! derived double covers are isomorphic as coverings, so counting
//! switching classes counts double covers up to covering isomorphism.

use crate::covering::{signing_from_cosupport, Sign, Signing};
use crate::graph::{Graph, SpanningSubgraph};
use thiserror::Error;

/// Class enumeration refuses above this vertex count (2^(n-1) members).
pub const CLASS_ENUMERATION_LIMIT: usize = 16;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SwitchingError {
    #[error("vertex {vertex} out of range for graph on {vertex_count} vertices")]
    VertexOutOfRange { vertex: usize, vertex_count: usize },
    #[error("subgraphs live over different parent graphs")]
    ParentMismatch,
    #[error("graph on {0} vertices exceeds the enumeration limit of {1}")]
    LimitExceeded(usize, usize),
    #[error("claimed witness does not switch the source onto the target")]
    NotAWitness,
}

fn membership(
    vertex_count: usize,
    subset: &[usize],
) -> Result<Vec<bool>, SwitchingError> {
    let mut in_x = vec![false; vertex_count];
    for &v in subset {
        if v >= vertex_count {
            return Err(SwitchingError::VertexOutOfRange {
                vertex: v,
                vertex_count,
            });
        }
        in_x[v] = true;
    }
    Ok(in_x)
}

/// Switches `h` by the vertex set `subset`: edges of the parent crossing
/// the cut flip their membership, all others keep it.
pub fn seidel_switch(
    h: &SpanningSubgraph,
    subset: &[usize],
) -> Result<SpanningSubgraph, SwitchingError> {
    let parent = h.parent();
    let in_x = membership(parent.vertex_count(), subset)?;
    let edges: Vec<_> = parent
        .edges()
        .iter()
        .filter(|&&(u, v)| {
            let crosses = in_x[u] != in_x[v];
            h.has_edge(u, v) != crosses
        })
        .copied()
        .collect();
    Ok(SpanningSubgraph::new(parent.clone(), &edges).expect("edges come from the parent"))
}

/// Flips the sign of every edge with exactly one endpoint in `subset`.
pub fn switch_signing(signing: &Signing, subset: &[usize]) -> Result<Signing, SwitchingError> {
    let base = signing.base();
    let in_x = membership(base.vertex_count(), subset)?;
    let signs = base
        .edges()
        .iter()
        .zip(signing.signs())
        .map(|(&(u, v), &s)| if in_x[u] != in_x[v] { s.flip() } else { s })
        .collect();
    Ok(Signing::new(base.clone(), signs).expect("one sign per edge"))
}

/// A vertex set that provably switches one subgraph onto another.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SwitchWitness {
    subset: Vec<usize>,
}

impl SwitchWitness {
    /// Checks `source` switched by `subset` equals `target`.
    pub fn new(
        source: &SpanningSubgraph,
        target: &SpanningSubgraph,
        subset: Vec<usize>,
    ) -> Result<Self, SwitchingError> {
        if source.parent() != target.parent() {
            return Err(SwitchingError::ParentMismatch);
        }
        if &seidel_switch(source, &subset)? != target {
            return Err(SwitchingError::NotAWitness);
        }
        let mut subset = subset;
        subset.sort_unstable();
        subset.dedup();
        Ok(Self { subset })
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }
}

/// Decides switching equivalence in O(V + E). Switching by X turns `h`
/// into `k` iff the sign labeling s with s = -1 exactly on X satisfies
/// s(u) * s(v) = sign_h(e) * sign_k(e) on every parent edge e = (u, v),
/// where sign_h is the signing with cosupport h. The labeling propagates
/// along a BFS forest; any inconsistent edge rules a witness out. The
/// lowest vertex of each component is labeled +1, which fixes the
/// reported witness canonically.
pub fn are_switching_equivalent(
    h: &SpanningSubgraph,
    k: &SpanningSubgraph,
) -> Result<Option<SwitchWitness>, SwitchingError> {
    if h.parent() != k.parent() {
        return Err(SwitchingError::ParentMismatch);
    }
    let parent = h.parent();
    let n = parent.vertex_count();
    let sig_h = signing_from_cosupport(h);
    let sig_k = signing_from_cosupport(k);
    let mut label: Vec<Option<Sign>> = vec![None; n];
    let mut queue = std::collections::VecDeque::new();
    for root in 0..n {
        if label[root].is_some() {
            continue;
        }
        label[root] = Some(Sign::Plus);
        queue.push_back(root);
        while let Some(v) = queue.pop_front() {
            let lv = label[v].expect("labeled before queueing");
            for &w in parent.neighbors(v) {
                let need = sig_h
                    .sign(v, w)
                    .expect("parent edge")
                    .times(sig_k.sign(v, w).expect("parent edge"));
                let expected = lv.times(need);
                match label[w] {
                    None => {
                        label[w] = Some(expected);
                        queue.push_back(w);
                    }
                    Some(actual) if actual != expected => return Ok(None),
                    Some(_) => {}
                }
            }
        }
    }
    let subset: Vec<usize> = (0..n).filter(|&v| label[v] == Some(Sign::Minus)).collect();
    Ok(Some(
        SwitchWitness::new(h, k, subset).expect("propagated labeling satisfies every edge"),
    ))
}

/// The full switching class of `h`, deduplicated by edge set and sorted
/// by edge list. Refuses graphs above [`CLASS_ENUMERATION_LIMIT`].
pub fn enumerate_switching_class(
    h: &SpanningSubgraph,
) -> Result<Vec<SpanningSubgraph>, SwitchingError> {
    enumerate_switching_class_with_limit(h, CLASS_ENUMERATION_LIMIT)
}

pub fn enumerate_switching_class_with_limit(
    h: &SpanningSubgraph,
    limit: usize,
) -> Result<Vec<SpanningSubgraph>, SwitchingError> {
    let n = h.vertex_count();
    if n > limit {
        return Err(SwitchingError::LimitExceeded(n, limit));
    }
    // X and its complement switch identically, so one fixed vertex may be
    // pinned outside X.
    let free = n.saturating_sub(1);
    let mut seen = std::collections::BTreeSet::new();
    for mask in 0..(1u64 << free) {
        let subset: Vec<usize> = (0..free).filter(|&b| mask >> b & 1 == 1).map(|b| b + 1).collect();
        let switched = seidel_switch(h, &subset)?;
        seen.insert(switched.edges().to_vec());
    }
    Ok(seen
        .into_iter()
        .map(|edges| SpanningSubgraph::new(h.parent().clone(), &edges).expect("switched edges"))
        .collect())
}

/// Number of switching classes among all spanning subgraphs of `g`,
/// i.e. the number of double covers of `g` up to covering isomorphism.
///
/// Switching by X adds (symmetric difference) the cut of X to the edge
/// set, and the cuts form a GF(2) subspace of the edge space spanned by
/// the single-vertex cuts. Every class is a coset of that subspace, so
/// the count is 2^(edges - rank). The rank computation replaces orbit
/// enumeration; tests cross-check it against brute-force orbits.
pub fn count_cover_classes(g: &Graph) -> Result<u128, SwitchingError> {
    let n = g.vertex_count();
    if n > CLASS_ENUMERATION_LIMIT {
        return Err(SwitchingError::LimitExceeded(n, CLASS_ENUMERATION_LIMIT));
    }
    let m = g.edge_count();
    let mut basis: Vec<u128> = Vec::new();
    for v in 0..n {
        let mut cut = 0u128;
        for &w in g.neighbors(v) {
            cut |= 1 << g.edge_index(v, w).expect("adjacent");
        }
        // Gaussian elimination over GF(2).
        for b in &basis {
            let high = 127 - b.leading_zeros();
            if cut >> high & 1 == 1 {
                cut ^= b;
            }
        }
        if cut != 0 {
            basis.push(cut);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    let rank = basis.len();
    Ok(1u128 << (m - rank))
}
