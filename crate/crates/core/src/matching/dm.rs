//! Dulmage-Mendelsohn merge of two one-sided coverings.

use std::collections::BTreeSet;

use crate::graph::{components, BipartiteGraph, Matching, Side};

use super::MatchingError;

/// Merges a matching covering `x` (on the S side) with a matching covering
/// `y` (on the T side) into one matching covering `x` and `y` together.
///
/// Shared edges are kept. The symmetric difference splits into alternating
/// paths and cycles; a component contributes its `m_x`-edges when it contains
/// an x-node missed by `m_y`, and its `m_y`-edges otherwise. In a bipartite
/// graph those two cases never collide on one component.
pub fn dm_merge(
    g: &BipartiteGraph,
    m_x: &Matching,
    x: &BTreeSet<usize>,
    m_y: &Matching,
    y: &BTreeSet<usize>,
) -> Result<Matching, MatchingError> {
    if let Some(&s) = x.iter().find(|&&s| !m_x.covers_s(s)) {
        return Err(MatchingError::PreconditionViolated(format!("m_x misses s{s} of x")));
    }
    if let Some(&t) = y.iter().find(|&&t| !m_y.covers_t(t)) {
        return Err(MatchingError::PreconditionViolated(format!("m_y misses t{t} of y")));
    }

    let ex: BTreeSet<(usize, usize)> = m_x.edges().iter().copied().collect();
    let ey: BTreeSet<(usize, usize)> = m_y.edges().iter().copied().collect();
    let mut merged: Vec<(usize, usize)> = ex.intersection(&ey).copied().collect();
    let diff: Vec<(usize, usize)> = ex.symmetric_difference(&ey).copied().collect();

    for comp in components(&diff, g) {
        let needs_mx = comp.nodes.iter().any(|n| {
            n.side == Side::S && x.contains(&n.index) && !m_y.covers_s(n.index)
        });
        let take = if needs_mx { &ex } else { &ey };
        merged.extend(comp.edges.iter().filter(|e| take.contains(e)));
    }
    merged.sort_unstable();
    Ok(Matching::new(g, merged)?)
}
