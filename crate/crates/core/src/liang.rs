//! Matching-plus-links covers of degree-3 T-nodes, and the translation
//! between such covers and V-free 2-matchings.
//!
//! The solver restricts to degree-3 T-nodes, reads the remainder as a
//! 3-uniform hypergraph on S, covers the degree-4 S-nodes with an extended
//! matching realized as S-links and S-claws, saturates the untouched
//! T-nodes with a plain matching, and finally trims every claw to a link.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use crate::extended::{extended_matching_covering_max_quasidegree, ExtendedMatching};
use crate::graph::{
    hypergraph_from_bipartite, BiNode, BipartiteGraph, Component, ComponentKind, Matching, SLink,
    SLinkFamily, Side, TwoMatching,
};
use crate::matching::saturating_matching;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LiangError {
    #[error("degree bound violated: {node} has degree {degree}, cap {cap}")]
    DegreeBound { node: BiNode, degree: usize, cap: usize },
    #[error("2-matching has a V-path component centred at s{center}")]
    NotVFree { center: usize },
    #[error("2-matching does not cover required node t{0}")]
    CoverageGap(usize),
    #[error("invalid solution: {0}")]
    InvalidSolution(String),
    /// A step the construction guarantees has failed: a library bug.
    #[error("internal solver violation: {0}")]
    Internal(String),
}

/// A matching and a family of node-disjoint S-links whose union covers
/// `covered`; the matching shares no edge with the links.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiangSolution {
    pub m: Matching,
    pub f: SLinkFamily,
    pub covered: BTreeSet<usize>,
}

/// Validity report: violations plus which T-nodes the solution covers,
/// split into the demanded ones and incidental extras.
#[derive(Clone, Debug)]
pub struct LiangReport {
    pub violations: Vec<String>,
    pub required_covered: BTreeSet<usize>,
    pub incidental_covered: BTreeSet<usize>,
}

impl LiangReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

fn internal(msg: impl Into<String>) -> LiangError {
    LiangError::Internal(msg.into())
}

/// Covers every degree-3 T-node with a matching plus node-disjoint S-links.
/// Demands d(s) ≤ 4 and d(t) ≤ 3.
pub fn solve_liang(g: &BipartiteGraph) -> Result<LiangSolution, LiangError> {
    for s in 0..g.s_count() {
        if g.deg_s(s) > 4 {
            return Err(LiangError::DegreeBound { node: BiNode::s(s), degree: g.deg_s(s), cap: 4 });
        }
    }
    for t in 0..g.t_count() {
        if g.deg_t(t) > 3 {
            return Err(LiangError::DegreeBound { node: BiNode::t(t), degree: g.deg_t(t), cap: 3 });
        }
    }

    // Keep only degree-3 T-nodes; their compact index is the hyperedge id.
    let req_t: Vec<usize> = (0..g.t_count()).filter(|&t| g.deg_t(t) == 3).collect();
    let mut t_new = vec![usize::MAX; g.t_count()];
    for (j, &t) in req_t.iter().enumerate() {
        t_new[t] = j;
    }
    let g3_edges: Vec<(usize, usize)> = g
        .edges()
        .iter()
        .filter(|&&(_, t)| t_new[t] != usize::MAX)
        .map(|&(s, t)| (s, t_new[t]))
        .collect();
    let g3 = BipartiteGraph::new(g.s_count(), req_t.len(), g3_edges)
        .expect("restriction of a valid graph");

    let h = hypergraph_from_bipartite(&g3, Side::S);
    debug_assert!(h.hyperedges().iter().all(|e| e.len() == 3));

    // Degree 4 in the hypergraph is exactly maximum quasi-degree 8, so the
    // extended matching covers precisely the nodes that need relief; with
    // maximum degree below 4 nothing needs it.
    let em = if h.max_degree() >= 4 {
        let full = extended_matching_covering_max_quasidegree(&h)
            .map_err(|e| internal(format!("extended matching failed: {e}")))?;
        let in_sprime = |v: usize| h.degree(v) == 4;
        let mut kept = ExtendedMatching::empty();
        for &id in &full.hyperedges {
            if h.hyperedge(id).iter().any(|&v| in_sprime(v)) {
                kept.hyperedges.push(id);
            }
        }
        for p in &full.pairs {
            if in_sprime(p.u) || in_sprime(p.v) {
                kept.pairs.push(*p);
            }
        }
        kept
    } else {
        ExtendedMatching::empty()
    };

    // Translate elements into edges of the restricted graph: a pair becomes
    // the 2 edges of an S-link through its witness, a hyperedge the 3 edges
    // of an S-claw. Element centers are distinct because two elements
    // sharing a witness would overlap inside a 3-node hyperedge.
    let mut n_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut centers = BTreeSet::new();
    let mut links: Vec<(usize, usize, usize)> = Vec::new();
    let mut claws: Vec<(usize, [usize; 3])> = Vec::new();
    for p in &em.pairs {
        assert!(centers.insert(p.witness), "element centers collide");
        n_edges.insert((p.u, p.witness));
        n_edges.insert((p.v, p.witness));
        links.push((p.u, p.witness, p.v));
    }
    for &id in &em.hyperedges {
        assert!(centers.insert(id), "element centers collide");
        let e = h.hyperedge(id);
        for &v in e {
            n_edges.insert((v, id));
        }
        claws.push((id, [e[0], e[1], e[2]]));
    }

    // Residual graph: all required T-nodes untouched by the link/claw edges
    // still have degree 3, and every S-node drops to at most 3, so a
    // saturating matching for them exists.
    let residual: Vec<(usize, usize)> = g3
        .edges()
        .iter()
        .filter(|e| !n_edges.contains(e))
        .copied()
        .collect();
    let gr = BipartiteGraph::new(g3.s_count(), g3.t_count(), residual)
        .expect("residual of a valid graph");
    let t_prime: BTreeSet<usize> = (0..g3.t_count()).filter(|t| !centers.contains(t)).collect();
    for s in 0..gr.s_count() {
        debug_assert!(gr.deg_s(s) <= 3, "residual degree bound failed at s{s}");
    }
    for &t in &t_prime {
        debug_assert_eq!(gr.deg_t(t), 3, "residual degree at untouched t{t}");
    }
    let m3 = saturating_matching(&gr, Side::T, &t_prime)
        .map_err(|e| internal(format!("residual saturation failed: {e}")))?;

    // Trim each claw to a link by dropping its lowest S-endpoint's edge.
    for &(center, nodes) in &claws {
        links.push((nodes[1], center, nodes[2]));
    }

    // Back to original T-ids; drop any matching edge whose T-node a link
    // already covers (vacuous here since the matching stays off the
    // centers, but the reduction rule is part of the contract).
    let link_centers: BTreeSet<usize> = links.iter().map(|&(_, c, _)| req_t[c]).collect();
    let mut m_edges: Vec<(usize, usize)> = Vec::new();
    for &(s, j) in m3.edges() {
        let t = req_t[j];
        if !link_centers.contains(&t) {
            m_edges.push((s, t));
        } else {
            debug_assert!(false, "saturating matching touched a covered center");
        }
    }
    let f = SLinkFamily::new(
        links.iter().map(|&(u, c, w)| SLink::new(u, req_t[c], w).expect("claw nodes are distinct")).collect(),
    )
    .map_err(|e| internal(format!("links are not disjoint: {e}")))?;
    let m = Matching::new(g, m_edges).map_err(|e| internal(format!("matching invalid: {e}")))?;
    let covered: BTreeSet<usize> = req_t.iter().copied().collect();

    let sol = LiangSolution { m, f, covered };
    debug_assert!(verify_liang(g, &sol, &sol.covered).is_ok());
    Ok(sol)
}

/// Checks a solution given as raw parts: matching edges, links as
/// (u, center, w) triples, and the T-set that must be covered.
pub fn verify_liang_parts(
    g: &BipartiteGraph,
    m_edges: &[(usize, usize)],
    links: &[(usize, usize, usize)],
    required: &BTreeSet<usize>,
) -> LiangReport {
    let mut violations = Vec::new();
    let mut m_deg: BTreeMap<BiNode, usize> = BTreeMap::new();
    for &(s, t) in m_edges {
        if s >= g.s_count() || t >= g.t_count() || !g.has_edge(s, t) {
            violations.push(format!("matching edge (s{s}, t{t}) is not an edge of the graph"));
            continue;
        }
        *m_deg.entry(BiNode::s(s)).or_insert(0) += 1;
        *m_deg.entry(BiNode::t(t)).or_insert(0) += 1;
    }
    for (node, d) in &m_deg {
        if *d > 1 {
            violations.push(format!("not a matching: {node} has {d} matching edges"));
        }
    }

    let mut link_nodes: BTreeMap<BiNode, usize> = BTreeMap::new();
    let mut link_edge_set: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, &(u, c, w)) in links.iter().enumerate() {
        if u >= g.s_count() || w >= g.s_count() || c >= g.t_count() {
            violations.push(format!("link {i}: node out of range"));
            continue;
        }
        if u == w {
            violations.push(format!("link {i}: endpoints coincide at s{u}"));
            continue;
        }
        for s in [u, w] {
            if !g.has_edge(s, c) {
                violations.push(format!("link {i}: edge (s{s}, t{c}) is not in the graph"));
            }
        }
        for node in [BiNode::s(u), BiNode::t(c), BiNode::s(w)] {
            if let Some(&j) = link_nodes.get(&node) {
                if j != i {
                    violations.push(format!("links {j} and {i} share {node}"));
                }
            } else {
                link_nodes.insert(node, i);
            }
        }
        link_edge_set.insert((u, c));
        link_edge_set.insert((w, c));
    }
    for e in m_edges {
        if link_edge_set.contains(e) {
            violations.push(format!("matching reuses link edge (s{}, t{})", e.0, e.1));
        }
    }

    let mut covered_t: BTreeSet<usize> = m_edges.iter().map(|&(_, t)| t).collect();
    covered_t.extend(links.iter().map(|&(_, c, _)| c));
    for &t in required {
        if t >= g.t_count() {
            violations.push(format!("required node t{t} out of range"));
        } else if !covered_t.contains(&t) {
            violations.push(format!("required node t{t} not covered"));
        }
    }
    let required_covered: BTreeSet<usize> =
        covered_t.intersection(required).copied().collect();
    let incidental_covered: BTreeSet<usize> =
        covered_t.difference(required).copied().collect();
    LiangReport { violations, required_covered, incidental_covered }
}

/// Checks a structured solution against the graph and a required T-set.
pub fn verify_liang(g: &BipartiteGraph, sol: &LiangSolution, required: &BTreeSet<usize>) -> LiangReport {
    let links: Vec<(usize, usize, usize)> =
        sol.f.links().iter().map(|l| (l.u, l.center, l.w)).collect();
    verify_liang_parts(g, sol.m.edges(), &links, required)
}

/// Union of matching and links as a V-free 2-matching covering
/// `sol.covered`. A T-node carrying a matching edge on top of a link would
/// reach degree 3; that matching edge is dropped, as the link keeps the
/// node covered.
pub fn links_to_vfree(g: &BipartiteGraph, sol: &LiangSolution) -> Result<TwoMatching, LiangError> {
    let report = verify_liang(g, sol, &sol.covered);
    if !report.is_ok() {
        return Err(LiangError::InvalidSolution(report.violations.join("; ")));
    }
    let mut edges: BTreeSet<(usize, usize)> = sol.f.edges().into_iter().collect();
    let mut t_link_deg = vec![0usize; g.t_count()];
    for &(_, t) in &edges {
        t_link_deg[t] += 1;
    }
    for &(s, t) in sol.m.edges() {
        if t_link_deg[t] < 2 {
            edges.insert((s, t));
        }
    }
    let tm = TwoMatching::new(g, edges.into_iter().collect())
        .map_err(|e| internal(format!("union is not a 2-matching: {e}")))?;
    if let Some(v) = tm.v_path(g) {
        return Err(internal(format!("union has a V-path through {}", v.nodes[1])));
    }
    debug_assert!(sol.covered.iter().all(|t| tm.covered_t().contains(t)));
    Ok(tm)
}

/// Extracts a matching-plus-links solution out of a V-free 2-matching: each
/// component gives up edges until only single matching edges and links
/// (optionally flanked by matching edges) remain, still covering the
/// required T-nodes.
pub fn vfree_to_links(
    g: &BipartiteGraph,
    n: &TwoMatching,
    required: &BTreeSet<usize>,
) -> Result<LiangSolution, LiangError> {
    if let Some(comp) = n.v_path(g) {
        return Err(LiangError::NotVFree { center: comp.nodes[1].index });
    }
    let covered = n.covered_t();
    for &t in required {
        if t >= g.t_count() || !covered.contains(&t) {
            return Err(LiangError::CoverageGap(t));
        }
    }

    let mut m_edges: Vec<(usize, usize)> = Vec::new();
    let mut links: Vec<SLink> = Vec::new();
    for comp in n.components(g) {
        match comp.kind {
            ComponentKind::Path => {
                let (mut m, mut l) = select_on_path(&comp, required)
                    .ok_or_else(|| internal(format!(
                        "no decomposition for path component starting at {}",
                        comp.nodes[0]
                    )))?;
                m_edges.append(&mut m);
                links.append(&mut l);
            }
            ComponentKind::Cycle => {
                // Alternate edges of an even cycle form a perfect matching
                // on it, covering every T-node without any link.
                let seq = &comp.nodes;
                for j in (0..seq.len()).step_by(2) {
                    m_edges.push(edge_between(seq[j], seq[(j + 1) % seq.len()]));
                }
            }
            ComponentKind::Other => unreachable!("2-matchings have maximum degree 2"),
        }
    }

    let m = Matching::new(g, m_edges).map_err(|e| internal(format!("selected matching: {e}")))?;
    let f = SLinkFamily::new(links).map_err(|e| internal(format!("selected links: {e}")))?;
    let sol = LiangSolution { m, f, covered: required.clone() };
    debug_assert!(verify_liang(g, &sol, required).is_ok());
    Ok(sol)
}

fn edge_between(a: BiNode, b: BiNode) -> (usize, usize) {
    match a.side {
        Side::S => (a.index, b.index),
        Side::T => (b.index, a.index),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Role {
    Unused,
    Match,
    LinkOpen,
    LinkClose,
}

use Role::{LinkClose, LinkOpen, Match as MatchEdge, Unused};

/// Per-path edge-role assignment. Roles along the walk obey: a link is an
/// adjacent LinkOpen/LinkClose pair around a T-node; matching edges touch
/// no other matching edge and no link at a T-node; every required T-node
/// gets a non-Unused incident edge. Picks the lexicographically first
/// feasible assignment in the order Unused, Match, LinkOpen.
fn select_on_path(
    comp: &Component,
    required: &BTreeSet<usize>,
) -> Option<(Vec<(usize, usize)>, Vec<SLink>)> {
    let seq = &comp.nodes;
    let k = seq.len() - 1;
    let needs: Vec<bool> =
        seq.iter().map(|n| n.side == Side::T && required.contains(&n.index)).collect();
    let order = [Unused, MatchEdge, LinkOpen, LinkClose];

    // legal(p, r, j): e_j may take role r after e_{j-1} took p.
    let legal = |p: Role, r: Role, j: usize| -> bool {
        let follows = match p {
            Unused => r != LinkClose,
            MatchEdge => r == Unused || r == LinkOpen,
            LinkOpen => r == LinkClose,
            LinkClose => r == Unused || r == MatchEdge,
        };
        follows
            && (r != LinkOpen || (j < k && seq[j].side == Side::T))
            && !(needs[j - 1] && p == Unused && r == Unused)
    };

    // feasible[j][p]: edges after e_j can complete given e_j took p.
    let idx = |r: Role| r as usize;
    let mut feasible = vec![[false; 4]; k + 1];
    for r in order {
        feasible[k][idx(r)] = r != LinkOpen && !(needs[k] && r == Unused);
    }
    for j in (1..k).rev() {
        for p in order {
            feasible[j][idx(p)] = order
                .iter()
                .any(|&r| legal(p, r, j + 1) && feasible[j + 1][idx(r)]);
        }
    }

    let mut roles = Vec::with_capacity(k);
    let mut prev = Unused;
    for j in 1..=k {
        let r = order
            .into_iter()
            .find(|&r| legal(prev, r, j) && feasible[j][idx(r)])?;
        roles.push(r);
        prev = r;
    }

    let mut m_edges = Vec::new();
    let mut links = Vec::new();
    for (j, &r) in roles.iter().enumerate() {
        match r {
            MatchEdge => m_edges.push(edge_between(seq[j], seq[j + 1])),
            LinkOpen => {
                let link = SLink::new(seq[j].index, seq[j + 1].index, seq[j + 2].index)
                    .expect("path nodes are distinct");
                links.push(link);
            }
            Unused | LinkClose => {}
        }
    }
    Some((m_edges, links))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bg(s: usize, t: usize, edges: &[(usize, usize)]) -> BipartiteGraph {
        BipartiteGraph::new(s, t, edges.to_vec()).unwrap()
    }

    fn complete(s: usize, t: usize) -> BipartiteGraph {
        let mut edges = Vec::new();
        for a in 0..s {
            for b in 0..t {
                edges.push((a, b));
            }
        }
        bg(s, t, &edges)
    }

    #[test]
    fn single_t_node_star() {
        let g = complete(3, 1);
        let sol = solve_liang(&g).unwrap();
        assert_eq!(sol.m.edges(), &[(0, 0)]);
        assert!(sol.f.is_empty());
        assert_eq!(sol.covered, [0].into_iter().collect());
    }

    #[test]
    fn k34_uses_one_link() {
        let g = complete(3, 4);
        let sol = solve_liang(&g).unwrap();
        assert!(verify_liang(&g, &sol, &sol.covered).is_ok());
        assert_eq!(sol.covered.len(), 4);
        assert_eq!(sol.f.len(), 1);
        assert_eq!(sol.m.len(), 3);
    }

    #[test]
    fn low_degree_t_nodes_need_nothing() {
        let g = bg(2, 2, &[(0, 0), (0, 1), (1, 1)]);
        let sol = solve_liang(&g).unwrap();
        assert!(sol.m.is_empty());
        assert!(sol.f.is_empty());
        assert!(sol.covered.is_empty());
    }

    #[test]
    fn rejects_degree_bounds() {
        let g = complete(5, 1);
        assert!(matches!(
            solve_liang(&bg(1, 5, &[(0, 0), (0, 1), (0, 2), (0, 3), (0, 4)])),
            Err(LiangError::DegreeBound { .. })
        ));
        assert!(matches!(
            solve_liang(&g),
            Err(LiangError::DegreeBound { .. })
        ));
    }

    #[test]
    fn union_is_vfree_and_covers() {
        let g = complete(3, 4);
        let sol = solve_liang(&g).unwrap();
        let tm = links_to_vfree(&g, &sol).unwrap();
        assert!(tm.is_v_free(&g));
        for t in 0..4 {
            assert!(tm.covered_t().contains(&t));
        }
    }

    #[test]
    fn vfree_single_edge_becomes_matching() {
        let g = bg(1, 1, &[(0, 0)]);
        let n = TwoMatching::new(&g, vec![(0, 0)]).unwrap();
        let sol = vfree_to_links(&g, &n, &[0].into_iter().collect()).unwrap();
        assert_eq!(sol.m.edges(), &[(0, 0)]);
        assert!(sol.f.is_empty());
    }

    #[test]
    fn vfree_four_path_splits_into_link_and_matching() {
        // t0 - s0 - t1 - s1 - t2 with all T-nodes required.
        let g = bg(2, 3, &[(0, 0), (0, 1), (1, 1), (1, 2)]);
        let n = TwoMatching::new(&g, g.edges().to_vec()).unwrap();
        let sol = vfree_to_links(&g, &n, &(0..3).collect()).unwrap();
        assert_eq!(sol.m.edges(), &[(0, 0), (1, 2)]);
        assert_eq!(sol.f.links(), &[SLink::new(0, 1, 1).unwrap()]);
    }

    #[test]
    fn vfree_eight_cycle_uses_alternating_edges() {
        // s0-t0-s1-t1-s2-t2-s3-t3-s0.
        let g = bg(
            4,
            4,
            &[(0, 0), (1, 0), (1, 1), (2, 1), (2, 2), (3, 2), (3, 3), (0, 3)],
        );
        let n = TwoMatching::new(&g, g.edges().to_vec()).unwrap();
        let sol = vfree_to_links(&g, &n, &(0..4).collect()).unwrap();
        assert_eq!(sol.m.len(), 4);
        assert!(sol.f.is_empty());
        assert!(verify_liang(&g, &sol, &(0..4).collect()).is_ok());
    }

    #[test]
    fn vfree_rejects_v_path() {
        let g = bg(1, 2, &[(0, 0), (0, 1)]);
        let n = TwoMatching::new(&g, g.edges().to_vec()).unwrap();
        assert_eq!(
            vfree_to_links(&g, &n, &(0..2).collect()),
            Err(LiangError::NotVFree { center: 0 })
        );
    }

    #[test]
    fn vfree_rejects_missing_coverage() {
        let g = bg(1, 2, &[(0, 0), (0, 1)]);
        let n = TwoMatching::new(&g, vec![(0, 0)]).unwrap();
        assert_eq!(
            vfree_to_links(&g, &n, &[1].into_iter().collect()),
            Err(LiangError::CoverageGap(1))
        );
    }

    #[test]
    fn verify_flags_shared_link_nodes() {
        let g = complete(3, 3);
        let report = verify_liang_parts(&g, &[], &[(0, 0, 1), (1, 1, 2)], &BTreeSet::new());
        assert_eq!(report.violations.len(), 1);
        assert!(report.violations[0].contains("share s1"));
    }

    #[test]
    fn verify_flags_non_matching() {
        let g = complete(2, 2);
        let report = verify_liang_parts(&g, &[(0, 0), (0, 1)], &[], &BTreeSet::new());
        assert!(report.violations.iter().any(|v| v.contains("not a matching")));
    }

    #[test]
    fn verify_reports_incidental_coverage() {
        let g = complete(2, 2);
        let report =
            verify_liang_parts(&g, &[(0, 0), (1, 1)], &[], &[0].into_iter().collect());
        assert!(report.is_ok());
        assert_eq!(report.required_covered, [0].into_iter().collect());
        assert_eq!(report.incidental_covered, [1].into_iter().collect());
    }

    #[test]
    fn round_trip_through_vfree() {
        let g = complete(3, 4);
        let sol = solve_liang(&g).unwrap();
        let tm = links_to_vfree(&g, &sol).unwrap();
        let back = vfree_to_links(&g, &tm, &sol.covered).unwrap();
        assert!(verify_liang(&g, &back, &sol.covered).is_ok());
        let tm2 = links_to_vfree(&g, &back).unwrap();
        assert!(tm2.is_v_free(&g));
        assert!(sol.covered.iter().all(|t| tm2.covered_t().contains(t)));
    }
}
