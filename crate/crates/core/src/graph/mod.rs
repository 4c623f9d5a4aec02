//! Shared graph model: bipartite graphs, multigraphs, hypergraphs, and the
//! matching-flavoured edge subsets built on top of them.
//!
//! Bipartite node ids are side-local: the S side and the T side each use a
//! dense `0..count` index space, and a [`BiNode`] pairs an index with its
//! side when a single value has to name a node unambiguously.

mod components;
mod convert;

pub use components::{components, Component, ComponentKind};
pub use convert::{bipartite_from_hypergraph, hypergraph_from_bipartite};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

/// Which side of a bipartite graph a node lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    S,
    T,
}

impl Side {
    /// The opposite side.
    pub fn other(self) -> Side {
        match self {
            Side::S => Side::T,
            Side::T => Side::S,
        }
    }
}

/// A bipartite node: side tag plus side-local index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiNode {
    pub side: Side,
    pub index: usize,
}

impl BiNode {
    pub fn s(index: usize) -> BiNode {
        BiNode { side: Side::S, index }
    }

    pub fn t(index: usize) -> BiNode {
        BiNode { side: Side::T, index }
    }
}

impl fmt::Display for BiNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.side {
            Side::S => write!(f, "s{}", self.index),
            Side::T => write!(f, "t{}", self.index),
        }
    }
}

/// Errors raised by graph and edge-subset constructors.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("node index {node} out of range on side {side:?} (count {count})")]
    IndexOutOfRange { side: Side, node: usize, count: usize },
    #[error("duplicate edge ({s}, {t})")]
    DuplicateEdge { s: usize, t: usize },
    #[error("edge ({s}, {t}) is not an edge of the host graph")]
    NotAnEdge { s: usize, t: usize },
    #[error("node {node} has degree {degree}, above the cap {cap}")]
    DegreeCapExceeded { node: BiNode, degree: usize, cap: usize },
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("hyperedge {edge} repeats node {node}")]
    RepeatedNode { edge: usize, node: usize },
    #[error("links share node {0}")]
    LinksNotDisjoint(BiNode),
    #[error("link endpoints coincide at s{0}")]
    DegenerateLink(usize),
}

/// A simple bipartite graph with dense side-local node ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BipartiteGraph {
    s_count: usize,
    t_count: usize,
    edges: Vec<(usize, usize)>,
    adj_s: Vec<Vec<usize>>,
    adj_t: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Builds a graph from an edge list. Edges are stored sorted and must be
    /// unique; indices must fit the side counts.
    pub fn new(
        s_count: usize,
        t_count: usize,
        edges: Vec<(usize, usize)>,
    ) -> Result<BipartiteGraph, GraphError> {
        let mut edges = edges;
        edges.sort_unstable();
        let mut adj_s = vec![Vec::new(); s_count];
        let mut adj_t = vec![Vec::new(); t_count];
        for w in edges.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateEdge { s: w[0].0, t: w[0].1 });
            }
        }
        for &(s, t) in &edges {
            if s >= s_count {
                return Err(GraphError::IndexOutOfRange { side: Side::S, node: s, count: s_count });
            }
            if t >= t_count {
                return Err(GraphError::IndexOutOfRange { side: Side::T, node: t, count: t_count });
            }
            adj_s[s].push(t);
            adj_t[t].push(s);
        }
        Ok(BipartiteGraph { s_count, t_count, edges, adj_s, adj_t })
    }

    pub fn s_count(&self) -> usize {
        self.s_count
    }

    pub fn t_count(&self) -> usize {
        self.t_count
    }

    /// Edge list, sorted ascending.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// T-neighbours of an S-node, ascending.
    pub fn adj_s(&self, s: usize) -> &[usize] {
        &self.adj_s[s]
    }

    /// S-neighbours of a T-node, ascending.
    pub fn adj_t(&self, t: usize) -> &[usize] {
        &self.adj_t[t]
    }

    pub fn deg_s(&self, s: usize) -> usize {
        self.adj_s[s].len()
    }

    pub fn deg_t(&self, t: usize) -> usize {
        self.adj_t[t].len()
    }

    pub fn has_edge(&self, s: usize, t: usize) -> bool {
        self.edges.binary_search(&(s, t)).is_ok()
    }

    /// The same graph with the two sides swapped.
    pub fn transposed(&self) -> BipartiteGraph {
        let edges = self.edges.iter().map(|&(s, t)| (t, s)).collect();
        BipartiteGraph::new(self.t_count, self.s_count, edges)
            .expect("transposing preserves validity")
    }
}

/// One bundle of parallel edges in a [`Multigraph`].
///
/// Endpoints are normalised `u < v`; `witness` optionally names a hyperedge
/// containing both endpoints (set by clique expansion).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiEdge {
    pub u: usize,
    pub v: usize,
    pub multiplicity: usize,
    pub witness: Option<usize>,
}

/// An undirected multigraph without self-loops on nodes `0..node_count`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Multigraph {
    node_count: usize,
    edges: Vec<MultiEdge>,
}

impl Multigraph {
    pub fn new(node_count: usize) -> Multigraph {
        Multigraph { node_count, edges: Vec::new() }
    }

    /// Builds a multigraph from `(u, v)` pairs, accumulating multiplicities.
    pub fn from_pairs(
        node_count: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Multigraph, GraphError> {
        let mut g = Multigraph::new(node_count);
        for (u, v) in pairs {
            g.add_edge(u, v, None)?;
        }
        Ok(g)
    }

    /// Adds one parallel edge. When an entry for the pair exists, the
    /// multiplicity grows and the lowest witness id is kept.
    pub fn add_edge(
        &mut self,
        u: usize,
        v: usize,
        witness: Option<usize>,
    ) -> Result<(), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        for &n in &[u, v] {
            if n >= self.node_count {
                return Err(GraphError::IndexOutOfRange {
                    side: Side::S,
                    node: n,
                    count: self.node_count,
                });
            }
        }
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        let at = self.edges.partition_point(|e| (e.u, e.v) < (u, v));
        if at < self.edges.len() && self.edges[at].u == u && self.edges[at].v == v {
            self.edges[at].multiplicity += 1;
            self.edges[at].witness = match (self.edges[at].witness, witness) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            };
        } else {
            self.edges.insert(at, MultiEdge { u, v, multiplicity: 1, witness });
        }
        Ok(())
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Distinct edge bundles, sorted by endpoints.
    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by_key(&(u, v), |e| (e.u, e.v))
            .map(|i| self.edges[i].multiplicity)
            .unwrap_or(0)
    }

    pub fn witness(&self, u: usize, v: usize) -> Option<usize> {
        let (u, v) = if u < v { (u, v) } else { (v, u) };
        self.edges
            .binary_search_by_key(&(u, v), |e| (e.u, e.v))
            .ok()
            .and_then(|i| self.edges[i].witness)
    }

    /// Degree counting multiplicities.
    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|e| e.u == v || e.v == v)
            .map(|e| e.multiplicity)
            .sum()
    }

    /// Simple-graph adjacency lists (parallel edges collapsed), ascending.
    pub fn support_adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.node_count];
        for e in &self.edges {
            adj[e.u].push(e.v);
            adj[e.v].push(e.u);
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        adj
    }

    /// Induced subgraph on `nodes` plus the map from new ids back to old ones.
    ///
    /// `nodes` must be sorted and duplicate-free.
    pub fn induced(&self, nodes: &[usize]) -> (Multigraph, Vec<usize>) {
        debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
        let mut new_id = vec![usize::MAX; self.node_count];
        for (i, &v) in nodes.iter().enumerate() {
            new_id[v] = i;
        }
        let mut g = Multigraph::new(nodes.len());
        for e in &self.edges {
            let (nu, nv) = (new_id[e.u], new_id[e.v]);
            if nu != usize::MAX && nv != usize::MAX {
                let at = g.edges.partition_point(|d| (d.u, d.v) < (nu.min(nv), nu.max(nv)));
                g.edges.insert(
                    at,
                    MultiEdge {
                        u: nu.min(nv),
                        v: nu.max(nv),
                        multiplicity: e.multiplicity,
                        witness: e.witness,
                    },
                );
            }
        }
        (g, nodes.to_vec())
    }
}

/// A hypergraph on nodes `0..node_count`; hyperedges are sets with stable ids
/// (their position). Parallel hyperedges are distinct entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hypergraph {
    node_count: usize,
    hyperedges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds a hypergraph; each hyperedge is sorted and must not repeat a
    /// node. Empty hyperedges are permitted.
    pub fn new(node_count: usize, hyperedges: Vec<Vec<usize>>) -> Result<Hypergraph, GraphError> {
        let mut hyperedges = hyperedges;
        for (i, e) in hyperedges.iter_mut().enumerate() {
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::RepeatedNode { edge: i, node: w[0] });
            }
            if let Some(&n) = e.iter().find(|&&n| n >= node_count) {
                return Err(GraphError::IndexOutOfRange {
                    side: Side::S,
                    node: n,
                    count: node_count,
                });
            }
        }
        Ok(Hypergraph { node_count, hyperedges })
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn hyperedge_count(&self) -> usize {
        self.hyperedges.len()
    }

    /// Hyperedge with the given id, sorted ascending.
    pub fn hyperedge(&self, id: usize) -> &[usize] {
        &self.hyperedges[id]
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    /// Number of hyperedges containing `v`.
    pub fn degree(&self, v: usize) -> usize {
        self.hyperedges.iter().filter(|e| e.binary_search(&v).is_ok()).count()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.node_count).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// True when every hyperedge has odd cardinality (cardinality 1 counts).
    pub fn is_oddly_uniform(&self) -> bool {
        self.hyperedges.iter().all(|e| e.len() % 2 == 1)
    }
}

/// A matching in a bipartite graph: an edge subset with every node incident
/// to at most one edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    pub fn empty() -> Matching {
        Matching { edges: Vec::new() }
    }

    /// Validates degree caps and host membership.
    pub fn new(g: &BipartiteGraph, edges: Vec<(usize, usize)>) -> Result<Matching, GraphError> {
        check_subset(g, &edges, 1)?;
        let mut edges = edges;
        edges.sort_unstable();
        Ok(Matching { edges })
    }

    /// Builds from edges already known to form a matching in the host.
    pub(crate) fn from_sorted_unchecked(edges: Vec<(usize, usize)>) -> Matching {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        Matching { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, s: usize, t: usize) -> bool {
        self.edges.binary_search(&(s, t)).is_ok()
    }

    /// The T-partner of an S-node, if matched.
    pub fn mate_of_s(&self, s: usize) -> Option<usize> {
        self.edges.iter().find(|&&(a, _)| a == s).map(|&(_, t)| t)
    }

    /// The S-partner of a T-node, if matched.
    pub fn mate_of_t(&self, t: usize) -> Option<usize> {
        self.edges.iter().find(|&&(_, b)| b == t).map(|&(s, _)| s)
    }

    pub fn covers_s(&self, s: usize) -> bool {
        self.mate_of_s(s).is_some()
    }

    pub fn covers_t(&self, t: usize) -> bool {
        self.mate_of_t(t).is_some()
    }

    pub fn covered_s(&self) -> BTreeSet<usize> {
        self.edges.iter().map(|&(s, _)| s).collect()
    }

    pub fn covered_t(&self) -> BTreeSet<usize> {
        self.edges.iter().map(|&(_, t)| t).collect()
    }
}

/// A 2-matching in a bipartite graph: an edge subset with every node incident
/// to at most two edges. Its components are necessarily node-disjoint paths
/// and cycles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoMatching {
    edges: Vec<(usize, usize)>,
}

impl TwoMatching {
    /// Validates degree caps and host membership.
    pub fn new(g: &BipartiteGraph, edges: Vec<(usize, usize)>) -> Result<TwoMatching, GraphError> {
        check_subset(g, &edges, 2)?;
        let mut edges = edges;
        edges.sort_unstable();
        Ok(TwoMatching { edges })
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, s: usize, t: usize) -> bool {
        self.edges.binary_search(&(s, t)).is_ok()
    }

    /// T-nodes incident to at least one edge.
    pub fn covered_t(&self) -> BTreeSet<usize> {
        self.edges.iter().map(|&(_, t)| t).collect()
    }

    /// Path/cycle decomposition within the host graph.
    pub fn components(&self, g: &BipartiteGraph) -> Vec<Component> {
        components(&self.edges, g)
    }

    /// Returns the first component that is a V-path (a 2-edge path with both
    /// ends on the T side), if any.
    pub fn v_path(&self, g: &BipartiteGraph) -> Option<Component> {
        self.components(g).into_iter().find(|c| c.is_v_path())
    }

    /// True when no component is a V-path.
    pub fn is_v_free(&self, g: &BipartiteGraph) -> bool {
        self.v_path(g).is_none()
    }
}

fn check_subset(
    g: &BipartiteGraph,
    edges: &[(usize, usize)],
    cap: usize,
) -> Result<(), GraphError> {
    let mut seen = BTreeSet::new();
    let mut deg_s = vec![0usize; g.s_count()];
    let mut deg_t = vec![0usize; g.t_count()];
    for &(s, t) in edges {
        if !g.has_edge(s, t) {
            return Err(GraphError::NotAnEdge { s, t });
        }
        if !seen.insert((s, t)) {
            return Err(GraphError::DuplicateEdge { s, t });
        }
        deg_s[s] += 1;
        deg_t[t] += 1;
        if deg_s[s] > cap {
            return Err(GraphError::DegreeCapExceeded {
                node: BiNode::s(s),
                degree: deg_s[s],
                cap,
            });
        }
        if deg_t[t] > cap {
            return Err(GraphError::DegreeCapExceeded {
                node: BiNode::t(t),
                degree: deg_t[t],
                cap,
            });
        }
    }
    Ok(())
}

/// An S-link: a 2-edge path `u - center - w` with `u, w` on the S side and
/// the center on the T side. Endpoints are normalised `u < w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SLink {
    pub u: usize,
    pub center: usize,
    pub w: usize,
}

impl SLink {
    pub fn new(u: usize, center: usize, w: usize) -> Result<SLink, GraphError> {
        if u == w {
            return Err(GraphError::DegenerateLink(u));
        }
        let (u, w) = if u < w { (u, w) } else { (w, u) };
        Ok(SLink { u, center, w })
    }

    /// Both edges of the link as `(s, t)` pairs.
    pub fn edges(&self) -> [(usize, usize); 2] {
        [(self.u, self.center), (self.w, self.center)]
    }

    pub fn nodes(&self) -> [BiNode; 3] {
        [BiNode::s(self.u), BiNode::t(self.center), BiNode::s(self.w)]
    }
}

/// A family of pairwise node-disjoint S-links.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SLinkFamily {
    links: Vec<SLink>,
}

impl SLinkFamily {
    pub fn empty() -> SLinkFamily {
        SLinkFamily { links: Vec::new() }
    }

    /// Validates pairwise node-disjointness; links are stored sorted.
    pub fn new(links: Vec<SLink>) -> Result<SLinkFamily, GraphError> {
        let mut links = links;
        links.sort_unstable();
        let mut seen: BTreeSet<BiNode> = BTreeSet::new();
        for l in &links {
            for n in l.nodes() {
                if !seen.insert(n) {
                    return Err(GraphError::LinksNotDisjoint(n));
                }
            }
        }
        Ok(SLinkFamily { links })
    }

    pub fn links(&self) -> &[SLink] {
        &self.links
    }

    pub fn len(&self) -> usize {
        self.links.len()
    }

    pub fn is_empty(&self) -> bool {
        self.links.is_empty()
    }

    /// All edges of all links, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = self.links.iter().flat_map(|l| l.edges()).collect();
        out.sort_unstable();
        out
    }

    /// Centers of the links.
    pub fn centers(&self) -> BTreeSet<usize> {
        self.links.iter().map(|l| l.center).collect()
    }
}
