//! Quasi-regularization by padding, and the extended matching covering all
//! maximum-quasi-degree nodes that it yields.

use crate::graph::Hypergraph;

use super::{
    perfect_extended_matching, quasi_degrees, verify_extended_matching, ExtendedMatching,
    ExtendedMatchingError,
};

/// Three disjoint copies of a hypergraph plus per-node filler triples.
///
/// Node `v` of copy `c` becomes `c * n + v`; hyperedge `e` of copy `c`
/// becomes `c * m + e`, so copy 0 keeps the original ids. The filler
/// triples {v, n+v, 2n+v} sit after the copied hyperedges.
#[derive(Clone, Debug)]
pub struct PaddedHypergraph {
    pub padded: Hypergraph,
    pub original_node_count: usize,
    pub original_hyperedge_count: usize,
}

impl PaddedHypergraph {
    pub fn original_node(&self, padded_node: usize) -> usize {
        padded_node % self.original_node_count
    }

    pub fn copy_index(&self, padded_node: usize) -> usize {
        padded_node / self.original_node_count
    }

    /// The original id of a copy-0 hyperedge; copies and fillers map to none.
    pub fn original_hyperedge(&self, padded_id: usize) -> Option<usize> {
        (padded_id < self.original_hyperedge_count).then_some(padded_id)
    }
}

/// Pads an oddly uniform hypergraph to a quasi-regular one with the same
/// maximum quasi-degree: three disjoint copies, plus γ(v)/2 triples across
/// the copies of each deficient node v. Each triple raises its members'
/// quasi-degrees by 2, and every γ(v) is even, so the count lands exactly
/// on Δ; the postcondition is rechecked rather than trusted.
pub fn pad_to_quasi_regular(h: &Hypergraph) -> Result<PaddedHypergraph, ExtendedMatchingError> {
    for (id, e) in h.hyperedges().iter().enumerate() {
        if e.len() % 2 == 0 {
            return Err(ExtendedMatchingError::NotOddlyUniform { edge: id, len: e.len() });
        }
    }
    let n = h.node_count();
    let m = h.hyperedge_count();
    let profile = quasi_degrees(h);

    let mut hyperedges = Vec::with_capacity(3 * m);
    for c in 0..3 {
        for e in h.hyperedges() {
            hyperedges.push(e.iter().map(|&v| c * n + v).collect::<Vec<_>>());
        }
    }
    for v in 0..n {
        debug_assert!(profile.deficiencies[v] % 2 == 0, "odd deficiency at node {v}");
        for _ in 0..profile.deficiencies[v] / 2 {
            hyperedges.push(vec![v, n + v, 2 * n + v]);
        }
    }
    let padded = Hypergraph::new(3 * n, hyperedges).expect("copy layout stays in range");

    let check = quasi_degrees(&padded);
    assert!(check.is_quasi_regular(), "padding failed to equalize quasi-degrees");
    assert_eq!(check.max, profile.max, "padding changed the maximum quasi-degree");
    Ok(PaddedHypergraph {
        padded,
        original_node_count: n,
        original_hyperedge_count: m,
    })
}

/// An extended matching of an oddly uniform hypergraph covering every node
/// of maximum quasi-degree: pad to quasi-regular, solve perfectly, keep the
/// elements living in copy 0.
///
/// The restriction works because a maximum node v has γ(v) = 0, so no
/// filler triple touches it; whatever covers v in the padded solution is
/// witnessed by an original copy-0 hyperedge and survives.
pub fn extended_matching_covering_max_quasidegree(
    h: &Hypergraph,
) -> Result<ExtendedMatching, ExtendedMatchingError> {
    let pad = pad_to_quasi_regular(h)?;
    let full = perfect_extended_matching(&pad.padded)?;
    let m = pad.original_hyperedge_count;

    let mut em = ExtendedMatching::empty();
    for &id in &full.hyperedges {
        if let Some(orig) = pad.original_hyperedge(id) {
            em.hyperedges.push(orig);
        }
    }
    for p in &full.pairs {
        if pad.original_hyperedge(p.witness).is_some() {
            debug_assert!(p.u < pad.original_node_count && p.v < pad.original_node_count);
            em.pairs.push(*p);
        }
    }
    em.normalize();

    let required = quasi_degrees(h).max_nodes();
    let report = verify_extended_matching(h, &em, &required);
    if !report.is_empty() {
        return Err(ExtendedMatchingError::InternalTheoremViolation(format!(
            "copy-0 restriction fails verification (kept {} of {m} ids): {}",
            em.hyperedges.len(),
            report.join("; ")
        )));
    }
    Ok(em)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hg(n: usize, edges: &[&[usize]]) -> Hypergraph {
        Hypergraph::new(n, edges.iter().map(|e| e.to_vec()).collect()).unwrap()
    }

    #[test]
    fn quasi_regular_input_gets_no_fillers() {
        let pad = pad_to_quasi_regular(&hg(3, &[&[0, 1, 2]])).unwrap();
        assert_eq!(pad.padded.node_count(), 9);
        assert_eq!(pad.padded.hyperedge_count(), 3);
        assert_eq!(pad.padded.hyperedge(1), &[3, 4, 5]);
    }

    #[test]
    fn deficient_nodes_get_triples() {
        let pad = pad_to_quasi_regular(&hg(4, &[&[0, 1, 2], &[1, 2, 3]])).unwrap();
        assert_eq!(pad.padded.node_count(), 12);
        // 6 copied hyperedges, then one triple each for nodes 0 and 3.
        assert_eq!(pad.padded.hyperedge_count(), 8);
        assert_eq!(pad.padded.hyperedge(6), &[0, 4, 8]);
        assert_eq!(pad.padded.hyperedge(7), &[3, 7, 11]);
        let check = quasi_degrees(&pad.padded);
        assert!(check.is_quasi_regular());
        assert_eq!(check.max, 4);
    }

    #[test]
    fn degenerate_single_node() {
        let pad = pad_to_quasi_regular(&hg(1, &[])).unwrap();
        assert_eq!(pad.padded.node_count(), 3);
        assert_eq!(pad.padded.hyperedge_count(), 0);
    }

    #[test]
    fn embedding_maps_back() {
        let pad = pad_to_quasi_regular(&hg(4, &[&[0, 1, 2], &[1, 2, 3]])).unwrap();
        assert_eq!(pad.original_node(5), 1);
        assert_eq!(pad.copy_index(5), 1);
        assert_eq!(pad.original_hyperedge(0), Some(0));
        assert_eq!(pad.original_hyperedge(2), None);
        assert_eq!(pad.original_hyperedge(7), None);
    }

    #[test]
    fn covers_the_overlap_of_two_triples() {
        let h = hg(4, &[&[0, 1, 2], &[1, 2, 3]]);
        let em = extended_matching_covering_max_quasidegree(&h).unwrap();
        let covered = em.covered(&h);
        assert!(covered.contains(&1) && covered.contains(&2));
    }

    #[test]
    fn quasi_regular_input_yields_perfect_cover() {
        let h = hg(3, &[&[0, 1, 2], &[0, 1, 2], &[0, 1, 2], &[0, 1, 2]]);
        let em = extended_matching_covering_max_quasidegree(&h).unwrap();
        assert_eq!(em.covered(&h), (0..3).collect());
    }

    #[test]
    fn rejects_even_hyperedges() {
        assert!(matches!(
            pad_to_quasi_regular(&hg(2, &[&[0, 1]])),
            Err(ExtendedMatchingError::NotOddlyUniform { .. })
        ));
    }
}
