//! Perfect extended matchings for oddly uniform quasi-regular hypergraphs.
//!
//! The construction works on the clique expansion G. When G has a perfect
//! matching the pairs are read off directly. Otherwise the Gallai-Edmonds
//! decomposition (D, A, C) drives a repair: D-components that span a
//! hyperedge can absorb their odd order by using that hyperedge as an
//! element; the remaining components are matched into A through a
//! contracted bipartite graph, which must have a saturating matching
//! because every such component sends at least Δ parallel edges into A.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{BipartiteGraph, Hypergraph, Matching, Multigraph, Side};
use crate::matching::{dm_merge, gallai_edmonds, max_matching_general, saturating_matching};

use super::{quasi_degrees, verify_extended_matching, ExtendedMatching, ExtendedMatchingError, ExtendedPair};

fn itv(msg: impl Into<String>) -> ExtendedMatchingError {
    ExtendedMatchingError::InternalTheoremViolation(msg.into())
}

fn witnessed(g: &Multigraph, u: usize, v: usize) -> ExtendedPair {
    let witness = g.witness(u, v).expect("clique-expansion edges carry a witness");
    ExtendedPair { u: u.min(v), v: u.max(v), witness }
}

/// Perfect matching of the subgraph induced by `nodes`, expressed as
/// witnessed pairs in the host ids. Errors when no perfect matching exists.
fn perfect_pairs_on(
    g: &Multigraph,
    nodes: &[usize],
    context: &str,
) -> Result<Vec<ExtendedPair>, ExtendedMatchingError> {
    let (sub, back) = g.induced(nodes);
    let m = max_matching_general(&sub);
    if !m.is_perfect(&sub) {
        return Err(itv(format!("{context}: induced subgraph has no perfect matching")));
    }
    Ok(m.pairs().iter().map(|&(u, v)| witnessed(g, back[u], back[v])).collect())
}

/// Builds a perfect extended matching of an oddly uniform quasi-regular
/// hypergraph. Fails with a precondition error otherwise; internal errors
/// indicate a bug, not an input property.
pub fn perfect_extended_matching(h: &Hypergraph) -> Result<ExtendedMatching, ExtendedMatchingError> {
    for (id, e) in h.hyperedges().iter().enumerate() {
        if e.len() % 2 == 0 {
            return Err(ExtendedMatchingError::NotOddlyUniform { edge: id, len: e.len() });
        }
    }
    let profile = quasi_degrees(h);
    for (v, &d) in profile.degrees.iter().enumerate() {
        if d != profile.max {
            return Err(ExtendedMatchingError::NotQuasiRegular {
                node: v,
                degree: d,
                max: profile.max,
            });
        }
    }
    if profile.max == 0 {
        // Only singleton hyperedges exist; a node in none of them is lost.
        for v in 0..h.node_count() {
            if h.degree(v) == 0 {
                return Err(ExtendedMatchingError::UncoverableNode { node: v });
            }
        }
    }

    let g = super::clique_expansion(h);
    let ge = gallai_edmonds(&g);

    let mut em = ExtendedMatching::empty();
    if ge.matching.is_perfect(&g) {
        em.pairs = ge.matching.pairs().iter().map(|&(u, v)| witnessed(&g, u, v)).collect();
        return finish(h, em);
    }

    // Components spanning a hyperedge (all its nodes in one component) can
    // host that hyperedge as an element; record the lowest id per component.
    let comp_count = ge.d_components.len();
    let mut comp_of = vec![usize::MAX; h.node_count()];
    for (k, comp) in ge.d_components.iter().enumerate() {
        for &v in comp {
            comp_of[v] = k;
        }
    }
    let mut spanned: Vec<Option<usize>> = vec![None; comp_count];
    for (id, e) in h.hyperedges().iter().enumerate() {
        let k = comp_of[e[0]];
        if k != usize::MAX && e.iter().all(|&v| comp_of[v] == k) && spanned[k].is_none() {
            spanned[k] = Some(id);
        }
    }
    let d2: BTreeSet<usize> = (0..comp_count).filter(|&k| spanned[k].is_none()).collect();

    // Contracted bipartite graph: components vs A, with C and A-internal
    // edges removed. Track a lowest-endpoint representative per edge for
    // lifting, and the parallel-edge count for the degree bound below.
    let a_nodes: Vec<usize> = ge.a.iter().copied().collect();
    let mut a_pos = BTreeMap::new();
    for (i, &a) in a_nodes.iter().enumerate() {
        a_pos.insert(a, i);
    }
    let mut rep: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut parallel: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in g.edges() {
        let (d_end, a_end) = if comp_of[e.u] != usize::MAX && a_pos.contains_key(&e.v) {
            (e.u, e.v)
        } else if comp_of[e.v] != usize::MAX && a_pos.contains_key(&e.u) {
            (e.v, e.u)
        } else {
            continue;
        };
        let key = (comp_of[d_end], a_pos[&a_end]);
        let slot = rep.entry(key).or_insert(d_end);
        *slot = (*slot).min(d_end);
        *parallel.entry(key).or_insert(0) += e.multiplicity;
    }
    let gp_edges: Vec<(usize, usize)> = rep.keys().copied().collect();
    let gp = BipartiteGraph::new(comp_count, a_nodes.len(), gp_edges)
        .expect("contracted edges are in range and distinct");
    for &k in &d2 {
        let degree: usize = parallel
            .iter()
            .filter(|((du, _), _)| *du == k)
            .map(|(_, &m)| m)
            .sum();
        // Unspanned components keep at least Δ parallel edges into A.
        assert!(
            degree >= profile.max,
            "unspanned component {k} has contracted degree {degree} < {}",
            profile.max
        );
    }

    let m_x = saturating_matching(&gp, Side::S, &d2)
        .map_err(|e| itv(format!("saturating the unspanned components failed: {e}")))?;
    let mut m_y_edges = Vec::new();
    for (i, &a) in a_nodes.iter().enumerate() {
        let mate = ge.matching.mate(a).ok_or_else(|| itv("maximum matching misses an A-node"))?;
        let k = comp_of[mate];
        if k == usize::MAX {
            return Err(itv("A-node matched outside D"));
        }
        m_y_edges.push((k, i));
    }
    let m_y = Matching::new(&gp, m_y_edges)
        .map_err(|e| itv(format!("decomposition matching does not contract cleanly: {e}")))?;
    let all_a: BTreeSet<usize> = (0..a_nodes.len()).collect();
    let merged = dm_merge(&gp, &m_x, &d2, &m_y, &all_a)
        .map_err(|e| itv(format!("merge of component and separator matchings failed: {e}")))?;

    // Lift: each contracted edge pins one node of its component to an
    // A-node; the rest of the component is matched internally, which is
    // possible because D-components are factor-critical.
    let mut touched: BTreeMap<usize, usize> = BTreeMap::new();
    for &(k, i) in merged.edges() {
        let d_end = rep[&(k, i)];
        em.pairs.push(witnessed(&g, d_end, a_nodes[i]));
        touched.insert(k, d_end);
    }
    for (i, &a) in a_nodes.iter().enumerate() {
        if !merged.covers_t(i) {
            return Err(itv(format!("merged matching misses separator node {a}")));
        }
    }
    for (k, comp) in ge.d_components.iter().enumerate() {
        match touched.get(&k) {
            Some(&pinned) => {
                let rest: Vec<usize> = comp.iter().copied().filter(|&v| v != pinned).collect();
                em.pairs.extend(perfect_pairs_on(&g, &rest, "touched component minus pin")?);
            }
            None => {
                let id = spanned[k].ok_or_else(|| itv(format!(
                    "component {k} is neither matched into the separator nor spans a hyperedge"
                )))?;
                em.hyperedges.push(id);
                let e = h.hyperedge(id);
                let rest: Vec<usize> =
                    comp.iter().copied().filter(|&v| e.binary_search(&v).is_err()).collect();
                em.pairs.extend(perfect_pairs_on(&g, &rest, "component minus spanned hyperedge")?);
            }
        }
    }
    let c_nodes: Vec<usize> = ge.c.iter().copied().collect();
    em.pairs.extend(perfect_pairs_on(&g, &c_nodes, "fully matched part")?);

    finish(h, em)
}

fn finish(h: &Hypergraph, mut em: ExtendedMatching) -> Result<ExtendedMatching, ExtendedMatchingError> {
    em.normalize();
    let all: BTreeSet<usize> = (0..h.node_count()).collect();
    let report = verify_extended_matching(h, &em, &all);
    if !report.is_empty() {
        return Err(itv(format!("result fails verification: {}", report.join("; "))));
    }
    Ok(em)
}
