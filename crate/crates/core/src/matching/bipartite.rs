//! Bipartite maximum matching (Hopcroft-Karp), saturating matchings with
//! Hall-violator extraction, and matchings covering all maximum-degree nodes.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::{BipartiteGraph, Matching, Side};

use super::{dm_merge, MatchingError};

const NONE: usize = usize::MAX;

/// Hopcroft-Karp on adjacency lists restricted to an allowed S-subset.
/// Returns `(mate_s, mate_t)`.
fn hopcroft_karp(
    g: &BipartiteGraph,
    allowed_s: &dyn Fn(usize) -> bool,
) -> (Vec<usize>, Vec<usize>) {
    let (ns, nt) = (g.s_count(), g.t_count());
    let mut mate_s = vec![NONE; ns];
    let mut mate_t = vec![NONE; nt];
    let mut dist = vec![NONE; ns];

    loop {
        // BFS phase: layer free S-nodes at distance 0.
        let mut queue = VecDeque::new();
        for s in 0..ns {
            if allowed_s(s) && mate_s[s] == NONE {
                dist[s] = 0;
                queue.push_back(s);
            } else {
                dist[s] = NONE;
            }
        }
        let mut reachable_free_t = false;
        while let Some(s) = queue.pop_front() {
            for &t in g.adj_s(s) {
                let m = mate_t[t];
                if m == NONE {
                    reachable_free_t = true;
                } else if dist[m] == NONE {
                    dist[m] = dist[s] + 1;
                    queue.push_back(m);
                }
            }
        }
        if !reachable_free_t {
            break;
        }
        // DFS phase along layered distances, lowest ids first.
        fn dfs(
            s: usize,
            g: &BipartiteGraph,
            dist: &mut [usize],
            mate_s: &mut [usize],
            mate_t: &mut [usize],
        ) -> bool {
            for &t in g.adj_s(s) {
                let m = mate_t[t];
                if m == NONE || (dist[m] == dist[s].wrapping_add(1) && dfs(m, g, dist, mate_s, mate_t))
                {
                    mate_s[s] = t;
                    mate_t[t] = s;
                    return true;
                }
            }
            dist[s] = NONE;
            false
        }
        for s in 0..ns {
            if allowed_s(s) && mate_s[s] == NONE {
                dfs(s, g, &mut dist, &mut mate_s, &mut mate_t);
            }
        }
    }
    (mate_s, mate_t)
}

fn matching_from_mates(mate_s: &[usize]) -> Matching {
    let edges: Vec<(usize, usize)> = mate_s
        .iter()
        .enumerate()
        .filter(|&(_, &t)| t != NONE)
        .map(|(s, &t)| (s, t))
        .collect();
    Matching::from_sorted_unchecked(edges)
}

/// Maximum matching of a bipartite graph. Deterministic: adjacency is
/// scanned in ascending order.
pub fn max_matching_bipartite(g: &BipartiteGraph) -> Matching {
    let (mate_s, _) = hopcroft_karp(g, &|_| true);
    matching_from_mates(&mate_s)
}

/// A matching covering every node of `x` (all on `side`), using only edges
/// incident to `x` on that side. When none exists, returns a Hall violator:
/// a subset `W` of `x` with `|N(W)| < |W|`.
pub fn saturating_matching(
    g: &BipartiteGraph,
    side: Side,
    x: &BTreeSet<usize>,
) -> Result<Matching, MatchingError> {
    match side {
        Side::S => saturate_s(g, x),
        Side::T => {
            let flipped = saturate_s(&g.transposed(), x)?;
            let edges = flipped.edges().iter().map(|&(t, s)| (s, t)).collect();
            Ok(Matching::new(g, edges).expect("transposed matching is valid"))
        }
    }
}

fn saturate_s(g: &BipartiteGraph, x: &BTreeSet<usize>) -> Result<Matching, MatchingError> {
    for &s in x {
        if s >= g.s_count() {
            return Err(MatchingError::PreconditionViolated(format!(
                "node s{s} out of range"
            )));
        }
    }
    let (mate_s, mate_t) = hopcroft_karp(g, &|s| x.contains(&s));
    if let Some(&unsat) = x.iter().find(|&&s| mate_s[s] == NONE) {
        // Alternating reachability from the lowest unsaturated x-node:
        // S to T over any edge, T back to S over the matching.
        let mut w = BTreeSet::from([unsat]);
        let mut seen_t = BTreeSet::new();
        let mut queue = VecDeque::from([unsat]);
        while let Some(s) = queue.pop_front() {
            for &t in g.adj_s(s) {
                if seen_t.insert(t) {
                    let m = mate_t[t];
                    debug_assert!(m != NONE, "free T-node would mean an augmenting path");
                    if m != NONE && w.insert(m) {
                        queue.push_back(m);
                    }
                }
            }
        }
        debug_assert_eq!(seen_t.len() + 1, w.len());
        return Err(MatchingError::NoSaturation { side: Side::S, violator: w });
    }
    Ok(matching_from_mates(&mate_s))
}

/// A matching covering every node of maximum degree. Exists in any bipartite
/// graph with at least one edge; built by saturating the maximum-degree
/// nodes of each side separately and merging.
///
/// Panics when `g` has no edges or when a saturating matching unexpectedly
/// fails (which would contradict the degree argument).
pub fn matching_covering_max_degree(g: &BipartiteGraph) -> Matching {
    assert!(g.edge_count() > 0, "graph without edges has no coverable max-degree nodes");
    let max_deg = (0..g.s_count())
        .map(|s| g.deg_s(s))
        .chain((0..g.t_count()).map(|t| g.deg_t(t)))
        .max()
        .unwrap();
    let x: BTreeSet<usize> = (0..g.s_count()).filter(|&s| g.deg_s(s) == max_deg).collect();
    let y: BTreeSet<usize> = (0..g.t_count()).filter(|&t| g.deg_t(t) == max_deg).collect();
    let m_x = saturating_matching(g, Side::S, &x)
        .expect("maximum-degree S-nodes always satisfy Hall's condition");
    let m_y = saturating_matching(g, Side::T, &y)
        .expect("maximum-degree T-nodes always satisfy Hall's condition");
    dm_merge(g, &m_x, &x, &m_y, &y).expect("saturating matchings satisfy the merge precondition")
}
