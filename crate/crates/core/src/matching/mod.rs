//! Matching computations: maximum matchings in bipartite graphs and general
//! multigraphs, saturating matchings with Hall-violator extraction, the
//! Dulmage-Mendelsohn merge, matchings covering all maximum-degree nodes,
//! and the Gallai-Edmonds decomposition.

mod bipartite;
mod blossom;
mod dm;
mod gallai_edmonds;

pub use bipartite::{matching_covering_max_degree, max_matching_bipartite, saturating_matching};
pub use blossom::max_matching_general;
pub use dm::dm_merge;
pub use gallai_edmonds::{gallai_edmonds, GallaiEdmonds};

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{GraphError, Multigraph, Side};

/// Errors from matching computations.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchingError {
    /// No matching covers the requested node set; the violator is a subset
    /// `W` of it with `|N(W)| < |W|`.
    #[error("no saturating matching: Hall violator of {} nodes on side {side:?}", violator.len())]
    NoSaturation { side: Side, violator: BTreeSet<usize> },
    /// A caller-supplied matching does not satisfy the op's precondition.
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A matching in a multigraph: node-disjoint pairs over one id space,
/// normalised `u < v` and sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneralMatching {
    pairs: Vec<(usize, usize)>,
}

impl GeneralMatching {
    pub fn empty() -> GeneralMatching {
        GeneralMatching { pairs: Vec::new() }
    }

    /// Validates node-disjointness and host membership (support edges).
    pub fn new(g: &Multigraph, pairs: Vec<(usize, usize)>) -> Result<GeneralMatching, GraphError> {
        let mut seen = BTreeSet::new();
        for &(u, v) in &pairs {
            if g.multiplicity(u, v) == 0 {
                return Err(GraphError::NotAnEdge { s: u, t: v });
            }
            for n in [u, v] {
                if !seen.insert(n) {
                    return Err(GraphError::DegreeCapExceeded {
                        node: crate::graph::BiNode::s(n),
                        degree: 2,
                        cap: 1,
                    });
                }
            }
        }
        let mut pairs: Vec<(usize, usize)> =
            pairs.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        pairs.sort_unstable();
        Ok(GeneralMatching { pairs })
    }

    pub(crate) fn from_mate(mate: &[usize]) -> GeneralMatching {
        let mut pairs = Vec::new();
        for (v, &m) in mate.iter().enumerate() {
            if m != blossom::NONE && v < m {
                pairs.push((v, m));
            }
        }
        GeneralMatching { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn covers(&self, v: usize) -> bool {
        self.mate(v).is_some()
    }

    pub fn mate(&self, v: usize) -> Option<usize> {
        for &(a, b) in &self.pairs {
            if a == v {
                return Some(b);
            }
            if b == v {
                return Some(a);
            }
        }
        None
    }

    /// True when the matching covers every node of the graph.
    pub fn is_perfect(&self, g: &Multigraph) -> bool {
        2 * self.pairs.len() == g.node_count()
    }
}
