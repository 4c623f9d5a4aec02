//! Extended matchings in hypergraphs: whole hyperedges plus witnessed node
//! pairs, pairwise node-disjoint.
//!
//! A pair (u, v) may be used only when some hyperedge contains both nodes;
//! that hyperedge is recorded as the pair's witness. The witness is evidence
//! of admissibility, not a claimed element, so it does not participate in
//! the disjointness requirement.

mod padding;
mod perfect;

pub use padding::{extended_matching_covering_max_quasidegree, pad_to_quasi_regular, PaddedHypergraph};
pub use perfect::perfect_extended_matching;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::graph::{Hypergraph, Multigraph};

/// A witnessed pair: `u < v`, both contained in hyperedge `witness`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExtendedPair {
    pub u: usize,
    pub v: usize,
    pub witness: usize,
}

/// A collection of hyperedges and witnessed pairs, pairwise node-disjoint.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ExtendedMatching {
    pub hyperedges: Vec<usize>,
    pub pairs: Vec<ExtendedPair>,
}

impl ExtendedMatching {
    pub fn empty() -> ExtendedMatching {
        ExtendedMatching::default()
    }

    /// Nodes covered by the chosen hyperedges and pair endpoints.
    pub fn covered(&self, h: &Hypergraph) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for &id in &self.hyperedges {
            out.extend(h.hyperedge(id).iter().copied());
        }
        for p in &self.pairs {
            out.insert(p.u);
            out.insert(p.v);
        }
        out
    }

    pub fn element_count(&self) -> usize {
        self.hyperedges.len() + self.pairs.len()
    }

    /// Sorts both element lists; ids and pairs keep their identities.
    pub fn normalize(&mut self) {
        self.hyperedges.sort_unstable();
        self.pairs.sort_unstable();
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ExtendedMatchingError {
    #[error("hyperedge {edge} has even cardinality {len}")]
    NotOddlyUniform { edge: usize, len: usize },
    #[error("node {node} has quasi-degree {degree}, maximum is {max}")]
    NotQuasiRegular { node: usize, degree: usize, max: usize },
    /// Raised in the zero-quasi-degree corner where a node lies in no
    /// hyperedge at all: no element can ever cover it.
    #[error("node {node} lies in no hyperedge and cannot be covered")]
    UncoverableNode { node: usize },
    /// A step the construction guarantees has failed; this signals a bug in
    /// the library, never a property of valid input.
    #[error("internal theorem violation: {0}")]
    InternalTheoremViolation(String),
}

/// Per-node quasi-degrees d⁻(v) = Σ(|e| − 1) over incident hyperedges,
/// their maximum, and the deficiencies γ(v) = Δ − d⁻(v).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiDegreeProfile {
    pub degrees: Vec<usize>,
    pub max: usize,
    pub deficiencies: Vec<usize>,
}

impl QuasiDegreeProfile {
    pub fn is_quasi_regular(&self) -> bool {
        self.deficiencies.iter().all(|&g| g == 0)
    }

    /// Nodes attaining the maximum quasi-degree.
    pub fn max_nodes(&self) -> BTreeSet<usize> {
        self.degrees
            .iter()
            .enumerate()
            .filter(|&(_, &d)| d == self.max)
            .map(|(v, _)| v)
            .collect()
    }
}

pub fn quasi_degrees(h: &Hypergraph) -> QuasiDegreeProfile {
    let mut degrees = vec![0usize; h.node_count()];
    for e in h.hyperedges() {
        if e.len() < 2 {
            continue;
        }
        for &v in e {
            degrees[v] += e.len() - 1;
        }
    }
    let max = degrees.iter().copied().max().unwrap_or(0);
    let deficiencies = degrees.iter().map(|&d| max - d).collect();
    QuasiDegreeProfile { degrees, max, deficiencies }
}

/// Replaces each hyperedge by a clique on its nodes. Parallel containment
/// accumulates multiplicity; each bundle remembers the lowest containing
/// hyperedge as witness. Cardinality-1 hyperedges contribute nothing.
pub fn clique_expansion(h: &Hypergraph) -> Multigraph {
    let mut g = Multigraph::new(h.node_count());
    for (id, e) in h.hyperedges().iter().enumerate() {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                g.add_edge(u, v, Some(id)).expect("hyperedge nodes are valid and distinct");
            }
        }
    }
    g
}

/// Checks `em` against `h`: element validity, witness containment, pairwise
/// node-disjointness, and coverage of `required`. Returns one line per
/// violation; empty means valid.
pub fn verify_extended_matching(
    h: &Hypergraph,
    em: &ExtendedMatching,
    required: &BTreeSet<usize>,
) -> Vec<String> {
    let mut report = Vec::new();
    let mut used: BTreeMap<usize, String> = BTreeMap::new();
    let mut claim = |nodes: &[usize], what: String, report: &mut Vec<String>| {
        for &v in nodes {
            match used.get(&v) {
                Some(prev) => report.push(format!("node {v} reused by {what} and {prev}")),
                None => {
                    used.insert(v, what.clone());
                }
            }
        }
    };

    let mut seen_ids = BTreeSet::new();
    for &id in &em.hyperedges {
        if id >= h.hyperedge_count() {
            report.push(format!("hyperedge {id} out of range"));
            continue;
        }
        if !seen_ids.insert(id) {
            report.push(format!("hyperedge {id} chosen twice"));
            continue;
        }
        claim(h.hyperedge(id), format!("hyperedge {id}"), &mut report);
    }
    for p in &em.pairs {
        let what = format!("pair ({}, {})", p.u, p.v);
        if p.u == p.v {
            report.push(format!("{what}: endpoints coincide"));
            continue;
        }
        if p.u >= h.node_count() || p.v >= h.node_count() {
            report.push(format!("{what}: node out of range"));
            continue;
        }
        if p.witness >= h.hyperedge_count() {
            report.push(format!("{what}: witness {} out of range", p.witness));
            continue;
        }
        let e = h.hyperedge(p.witness);
        if e.binary_search(&p.u).is_err() || e.binary_search(&p.v).is_err() {
            report.push(format!("{what}: witness {} does not contain both endpoints", p.witness));
        }
        claim(&[p.u, p.v], what, &mut report);
    }

    for &r in required {
        if !used.contains_key(&r) {
            report.push(format!("required node {r} not covered"));
        }
    }
    report
}
