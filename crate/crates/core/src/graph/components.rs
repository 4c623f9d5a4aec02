//! Connected-component decomposition of bipartite edge subsets.

use std::collections::BTreeMap;

use super::{BiNode, BipartiteGraph, Side};

/// Shape of one component of an edge subset.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ComponentKind {
    Path,
    Cycle,
    /// Some node has degree three or more, so the component is neither a
    /// path nor a cycle.
    Other,
}

/// One connected component of an edge subset.
///
/// For paths, `nodes` is the node sequence from one endpoint to the other,
/// starting at the smaller endpoint. For cycles, `nodes` starts at the
/// smallest node and proceeds toward its smaller neighbour; the closing edge
/// back to the start is implicit. For `Other` components, `nodes` is sorted
/// and carries no ordering promise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub kind: ComponentKind,
    pub nodes: Vec<BiNode>,
    /// The component's edges as `(s, t)` pairs, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl Component {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// True for a 2-edge path whose ends both lie on the T side.
    pub fn is_v_path(&self) -> bool {
        self.kind == ComponentKind::Path
            && self.nodes.len() == 3
            && self.nodes[0].side == Side::T
            && self.nodes[2].side == Side::T
    }
}

/// Decomposes an edge subset of `g` into connected components, ordering the
/// nodes of paths and cycles along the walk. Components are returned sorted
/// by their smallest node.
///
/// Panics when an edge falls outside the host's index ranges; membership in
/// the host's edge set is not checked here.
pub fn components(edges: &[(usize, usize)], g: &BipartiteGraph) -> Vec<Component> {
    for &(s, t) in edges {
        assert!(s < g.s_count() && t < g.t_count(), "edge ({s}, {t}) out of range");
    }
    let mut dedup: Vec<(usize, usize)> = edges.to_vec();
    dedup.sort_unstable();
    dedup.dedup();

    // Adjacency over BiNode keys; values ascending by (side, index).
    let mut adj: BTreeMap<BiNode, Vec<BiNode>> = BTreeMap::new();
    for &(s, t) in &dedup {
        adj.entry(BiNode::s(s)).or_default().push(BiNode::t(t));
        adj.entry(BiNode::t(t)).or_default().push(BiNode::s(s));
    }
    for nbrs in adj.values_mut() {
        nbrs.sort_unstable();
    }

    let mut assigned: BTreeMap<BiNode, usize> = BTreeMap::new();
    let mut groups: Vec<Vec<BiNode>> = Vec::new();
    for &start in adj.keys() {
        if assigned.contains_key(&start) {
            continue;
        }
        let id = groups.len();
        let mut stack = vec![start];
        let mut members = Vec::new();
        assigned.insert(start, id);
        while let Some(v) = stack.pop() {
            members.push(v);
            for &w in &adj[&v] {
                if !assigned.contains_key(&w) {
                    assigned.insert(w, id);
                    stack.push(w);
                }
            }
        }
        members.sort_unstable();
        groups.push(members);
    }

    let mut out = Vec::new();
    for members in groups {
        let degs: Vec<usize> = members.iter().map(|n| adj[n].len()).collect();
        let mut comp_edges: Vec<(usize, usize)> = Vec::new();
        for &n in &members {
            if n.side == Side::S {
                for &w in &adj[&n] {
                    comp_edges.push((n.index, w.index));
                }
            }
        }
        comp_edges.sort_unstable();

        if degs.iter().any(|&d| d > 2) {
            out.push(Component { kind: ComponentKind::Other, nodes: members, edges: comp_edges });
            continue;
        }

        let endpoints: Vec<BiNode> =
            members.iter().copied().filter(|n| adj[n].len() == 1).collect();
        if endpoints.is_empty() {
            // Cycle: walk from the smallest node toward its smaller neighbour.
            let start = members[0];
            let mut seq = vec![start];
            let mut prev = start;
            let mut cur = adj[&start][0];
            while cur != start {
                seq.push(cur);
                let next = *adj[&cur].iter().find(|&&w| w != prev).expect("cycle continues");
                prev = cur;
                cur = next;
            }
            out.push(Component { kind: ComponentKind::Cycle, nodes: seq, edges: comp_edges });
        } else {
            // Path: walk from the smaller endpoint.
            let start = endpoints[0];
            let mut seq = vec![start];
            let mut prev = start;
            let mut cur = adj[&start][0];
            loop {
                seq.push(cur);
                let next = adj[&cur].iter().copied().find(|&w| w != prev);
                match next {
                    Some(w) => {
                        prev = cur;
                        cur = w;
                    }
                    None => break,
                }
            }
            out.push(Component { kind: ComponentKind::Path, nodes: seq, edges: comp_edges });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BipartiteGraph;

    fn host(s: usize, t: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(s, t, edges.to_vec()).unwrap()
    }

    #[test]
    fn single_edge_is_a_path() {
        let g = host(1, 1, &[(0, 0)]);
        let cs = components(&[(0, 0)], &g);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].kind, ComponentKind::Path);
        assert_eq!(cs[0].nodes, vec![BiNode::s(0), BiNode::t(0)]);
        assert!(!cs[0].is_v_path());
    }

    #[test]
    fn v_path_is_flagged() {
        let g = host(1, 2, &[(0, 0), (0, 1)]);
        let cs = components(&[(0, 0), (0, 1)], &g);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].kind, ComponentKind::Path);
        assert!(cs[0].is_v_path());
        assert_eq!(cs[0].nodes, vec![BiNode::t(0), BiNode::s(0), BiNode::t(1)]);
    }

    #[test]
    fn lambda_path_is_not_a_v_path() {
        // s0 - t0 - s1: ends on the S side.
        let g = host(2, 1, &[(0, 0), (1, 0)]);
        let cs = components(&[(0, 0), (1, 0)], &g);
        assert_eq!(cs[0].nodes, vec![BiNode::s(0), BiNode::t(0), BiNode::s(1)]);
        assert!(!cs[0].is_v_path());
    }

    #[test]
    fn four_cycle_detected() {
        let g = host(2, 2, &[(0, 0), (0, 1), (1, 0), (1, 1)]);
        let cs = components(g.edges(), &g);
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].kind, ComponentKind::Cycle);
        assert_eq!(cs[0].nodes.len(), 4);
        assert_eq!(cs[0].nodes[0], BiNode::s(0));
        assert_eq!(cs[0].edge_count(), 4);
    }

    #[test]
    fn high_degree_component_is_other() {
        let g = host(1, 3, &[(0, 0), (0, 1), (0, 2)]);
        let cs = components(g.edges(), &g);
        assert_eq!(cs[0].kind, ComponentKind::Other);
        assert_eq!(cs[0].nodes.len(), 4);
    }

    #[test]
    fn multiple_components_sorted_and_edges_partitioned() {
        let g = host(3, 3, &[(0, 0), (1, 1), (1, 2), (2, 2)]);
        let cs = components(g.edges(), &g);
        assert_eq!(cs.len(), 2);
        let mut all: Vec<(usize, usize)> = cs.iter().flat_map(|c| c.edges.clone()).collect();
        all.sort_unstable();
        assert_eq!(all, g.edges());
    }
}
