//! Combinatorial matching toolkit.
//!
//! The crate is organised around three layers:
//!
//! * [`graph`] and [`io`] hold the shared graph model (bipartite graphs,
//!   multigraphs, hypergraphs, matchings, 2-matchings) and the line-based
//!   text formats used by every tool.
//! * [`matching`] and [`extended`] implement the solver machinery: maximum
//!   matching in bipartite graphs and general multigraphs, Dulmage-Mendelsohn
//!   merging, Gallai-Edmonds decomposition, and extended matchings in
//!   hypergraphs (perfect ones for oddly uniform quasi-regular inputs,
//!   covering ones for max-quasi-degree nodes).
//! * [`liang`], [`reduce3dm`], [`oracle`] and [`gen`] build on those: the
//!   degree-(4,3) cover solver producing a matching plus disjoint S-links,
//!   the hardness reduction from 3-dimensional matching to V-free 2-matching,
//!   small exhaustive reference oracles, and seeded instance generators.
//!
//! All algorithms are deterministic: ties are broken by lowest node id, and
//! generators are driven by a fixed, portable PRNG, so identical inputs and
//! seeds produce byte-identical outputs.

pub mod extended;
pub mod gen;
pub mod graph;
pub mod io;
pub mod liang;
pub mod matching;
pub mod oracle;
pub mod reduce3dm;

pub use extended::{ExtendedMatching, ExtendedMatchingError, QuasiDegreeProfile};
pub use graph::{
    BiNode, BipartiteGraph, Component, ComponentKind, GraphError, Hypergraph, Matching,
    Multigraph, SLink, SLinkFamily, Side, TwoMatching,
};
pub use liang::{LiangError, LiangSolution};
pub use matching::{GallaiEdmonds, GeneralMatching, MatchingError};
pub use oracle::{OracleBudget, OracleError};
pub use reduce3dm::{GadgetMap, ReductionError, ThreeDMInstance};
