//! Conversions between bipartite graphs and hypergraphs.
//!
//! Both directions use the identity correspondence: anchor-side node `v`
//! maps to hypergraph node `v`, and non-anchor node `i` maps to hyperedge
//! `i` (and back).

use super::{BipartiteGraph, Hypergraph, Side};

/// Reads a hypergraph off a bipartite graph: nodes are the anchor side,
/// hyperedge `i` is the neighbour set of the `i`-th non-anchor node.
/// Isolated non-anchor nodes become empty hyperedges.
pub fn hypergraph_from_bipartite(g: &BipartiteGraph, anchor: Side) -> Hypergraph {
    let (n, m) = match anchor {
        Side::S => (g.s_count(), g.t_count()),
        Side::T => (g.t_count(), g.s_count()),
    };
    let hyperedges: Vec<Vec<usize>> = (0..m)
        .map(|i| match anchor {
            Side::S => g.adj_t(i).to_vec(),
            Side::T => g.adj_s(i).to_vec(),
        })
        .collect();
    Hypergraph::new(n, hyperedges).expect("neighbour sets of a simple graph are valid hyperedges")
}

/// The incidence graph of a hypergraph: S-node per hypergraph node, T-node
/// per hyperedge, an edge whenever the node lies in the hyperedge.
pub fn bipartite_from_hypergraph(h: &Hypergraph) -> BipartiteGraph {
    let mut edges = Vec::new();
    for (i, e) in h.hyperedges().iter().enumerate() {
        for &v in e {
            edges.push((v, i));
        }
    }
    BipartiteGraph::new(h.node_count(), h.hyperedge_count(), edges)
        .expect("incidence edges of a valid hypergraph are valid")
}
