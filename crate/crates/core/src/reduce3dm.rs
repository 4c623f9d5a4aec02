//! Hardness gadget: a tripartite 3-regular 3-uniform hypergraph has a
//! perfect matching exactly when its reduced bipartite graph carries a
//! V-free 2-matching covering the whole T side.
//!
//! For part size n (and therefore 3n triples) the reduced graph has 8n
//! S-nodes, 12n T-nodes and 23n edges: per element an anchor edge pinning
//! s_x to t_x (resp. s_y to t_y), per triple e a 4-edge path
//! t1-s1-t2-s2-t3, and per triple the three connectors s_{x_e} t1,
//! s_{y_e} t1 and s1 t_{z_e}.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{BipartiteGraph, TwoMatching};

/// One element of the ground set, tagged with its part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartNode {
    X(usize),
    Y(usize),
    Z(usize),
}

impl fmt::Display for PartNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PartNode::X(i) => write!(f, "x{i}"),
            PartNode::Y(i) => write!(f, "y{i}"),
            PartNode::Z(i) => write!(f, "z{i}"),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("not a perfect matching: {node} lies in {count} chosen triples")]
    NotPerfectMatching { node: PartNode, count: usize },
    #[error("2-matching has a V-path centred at s{center}")]
    NotVFree { center: usize },
    #[error("T-node t{0} is not covered")]
    CoverageGap(usize),
    /// The lift met a configuration the correspondence rules out: a bug.
    #[error("theorem violation: {0}")]
    TheoremViolation(String),
}

/// A tripartite 3-uniform hypergraph on three parts of equal size n, where
/// every element lies in exactly 3 of the 3n triples. Repeated triples are
/// legal; ids are positions in the triple list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeDMInstance {
    n: usize,
    triples: Vec<(usize, usize, usize)>,
}

impl ThreeDMInstance {
    pub fn new(
        n: usize,
        triples: Vec<(usize, usize, usize)>,
    ) -> Result<ThreeDMInstance, ReductionError> {
        if triples.len() != 3 * n {
            return Err(ReductionError::InvalidInstance(format!(
                "part size {n} demands {} triples, found {}",
                3 * n,
                triples.len()
            )));
        }
        let mut count = [vec![0usize; n], vec![0usize; n], vec![0usize; n]];
        for (id, &(x, y, z)) in triples.iter().enumerate() {
            for (part, v) in [(0, x), (1, y), (2, z)] {
                if v >= n {
                    return Err(ReductionError::InvalidInstance(format!(
                        "triple {id} uses element {v} outside its part of size {n}"
                    )));
                }
                count[part][v] += 1;
            }
        }
        for part in 0..3 {
            for v in 0..n {
                if count[part][v] != 3 {
                    let node = [PartNode::X(v), PartNode::Y(v), PartNode::Z(v)][part];
                    return Err(ReductionError::InvalidInstance(format!(
                        "{node} lies in {} triples, want 3",
                        count[part][v]
                    )));
                }
            }
        }
        Ok(ThreeDMInstance { n, triples })
    }

    pub fn part_size(&self) -> usize {
        self.n
    }

    pub fn triple_count(&self) -> usize {
        self.triples.len()
    }

    pub fn triples(&self) -> &[(usize, usize, usize)] {
        &self.triples
    }

    pub fn triple(&self, id: usize) -> (usize, usize, usize) {
        self.triples[id]
    }

    /// Exhaustive perfect-matching search, lowest triple ids first.
    /// Exponential in the worst case; meant for test-scale instances.
    pub fn find_perfect_matching(&self) -> Option<BTreeSet<usize>> {
        let mut by_x = vec![Vec::new(); self.n];
        for (id, &(x, _, _)) in self.triples.iter().enumerate() {
            by_x[x].push(id);
        }
        let mut used_y = vec![false; self.n];
        let mut used_z = vec![false; self.n];
        let mut chosen = Vec::new();
        fn rec(
            x: usize,
            inst: &ThreeDMInstance,
            by_x: &[Vec<usize>],
            used_y: &mut [bool],
            used_z: &mut [bool],
            chosen: &mut Vec<usize>,
        ) -> bool {
            if x == inst.n {
                return true;
            }
            for &id in &by_x[x] {
                let (_, y, z) = inst.triples[id];
                if used_y[y] || used_z[z] {
                    continue;
                }
                used_y[y] = true;
                used_z[z] = true;
                chosen.push(id);
                if rec(x + 1, inst, by_x, used_y, used_z, chosen) {
                    return true;
                }
                chosen.pop();
                used_y[y] = false;
                used_z[z] = false;
            }
            false
        }
        if rec(0, self, &by_x, &mut used_y, &mut used_z, &mut chosen) {
            Some(chosen.into_iter().collect())
        } else {
            None
        }
    }

    pub fn has_perfect_matching(&self) -> bool {
        self.find_perfect_matching().is_some()
    }
}

/// Index bookkeeping for a reduced instance: which graph node plays which
/// gadget role. S side: all s_x, then s_y, then s1, s2 per triple. T side:
/// t_x, t_y, t_z, then t1, t2, t3 per triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetMap {
    n: usize,
    triples: Vec<(usize, usize, usize)>,
}

impl GadgetMap {
    pub fn part_size(&self) -> usize {
        self.n
    }

    pub fn s_x(&self, x: usize) -> usize {
        x
    }

    pub fn s_y(&self, y: usize) -> usize {
        self.n + y
    }

    pub fn s1(&self, e: usize) -> usize {
        2 * self.n + 2 * e
    }

    pub fn s2(&self, e: usize) -> usize {
        2 * self.n + 2 * e + 1
    }

    pub fn t_x(&self, x: usize) -> usize {
        x
    }

    pub fn t_y(&self, y: usize) -> usize {
        self.n + y
    }

    pub fn t_z(&self, z: usize) -> usize {
        2 * self.n + z
    }

    pub fn t1(&self, e: usize) -> usize {
        3 * self.n + 3 * e
    }

    pub fn t2(&self, e: usize) -> usize {
        3 * self.n + 3 * e + 1
    }

    pub fn t3(&self, e: usize) -> usize {
        3 * self.n + 3 * e + 2
    }

    /// Role annotations, one line per node and per edge: `<index> <role>
    /// <owner>`, grouped under section comments. Edges are keyed by their
    /// position in the graph's ascending edge list.
    pub fn sidecar(&self, g: &BipartiteGraph) -> String {
        let n = self.n;
        let mut out = String::from("# s-side nodes\n");
        for x in 0..n {
            out.push_str(&format!("{} s_x {x}\n", self.s_x(x)));
        }
        for y in 0..n {
            out.push_str(&format!("{} s_y {y}\n", self.s_y(y)));
        }
        for e in 0..self.triples.len() {
            out.push_str(&format!("{} s1 {e}\n", self.s1(e)));
            out.push_str(&format!("{} s2 {e}\n", self.s2(e)));
        }
        out.push_str("# t-side nodes\n");
        for x in 0..n {
            out.push_str(&format!("{} t_x {x}\n", self.t_x(x)));
        }
        for y in 0..n {
            out.push_str(&format!("{} t_y {y}\n", self.t_y(y)));
        }
        for z in 0..n {
            out.push_str(&format!("{} t_z {z}\n", self.t_z(z)));
        }
        for e in 0..self.triples.len() {
            out.push_str(&format!("{} t1 {e}\n", self.t1(e)));
            out.push_str(&format!("{} t2 {e}\n", self.t2(e)));
            out.push_str(&format!("{} t3 {e}\n", self.t3(e)));
        }

        let mut roles: Vec<((usize, usize), String)> = Vec::new();
        for x in 0..n {
            roles.push(((self.s_x(x), self.t_x(x)), format!("anchor_x {x}")));
        }
        for y in 0..n {
            roles.push(((self.s_y(y), self.t_y(y)), format!("anchor_y {y}")));
        }
        for (e, &(x, y, z)) in self.triples.iter().enumerate() {
            roles.push(((self.s1(e), self.t1(e)), format!("path_t1s1 {e}")));
            roles.push(((self.s1(e), self.t2(e)), format!("path_s1t2 {e}")));
            roles.push(((self.s2(e), self.t2(e)), format!("path_t2s2 {e}")));
            roles.push(((self.s2(e), self.t3(e)), format!("path_s2t3 {e}")));
            roles.push(((self.s_x(x), self.t1(e)), format!("conn_x {e}")));
            roles.push(((self.s_y(y), self.t1(e)), format!("conn_y {e}")));
            roles.push(((self.s1(e), self.t_z(z)), format!("conn_z {e}")));
        }
        roles.sort_unstable_by_key(|(edge, _)| *edge);
        out.push_str("# edges by position in the ascending edge list\n");
        for (i, ((s, t), role)) in roles.iter().enumerate() {
            debug_assert_eq!(g.edges()[i], (*s, *t));
            out.push_str(&format!("{i} {role}\n"));
        }
        out
    }
}

/// Builds the reduced bipartite graph and its role map. The output always
/// has 20n nodes and 23n edges, maximum degree 4, with the per-role degree
/// table asserted.
pub fn reduce_3dm(h: &ThreeDMInstance) -> (BipartiteGraph, GadgetMap) {
    let n = h.part_size();
    let gm = GadgetMap { n, triples: h.triples().to_vec() };
    let mut edges = Vec::with_capacity(23 * n);
    for x in 0..n {
        edges.push((gm.s_x(x), gm.t_x(x)));
    }
    for y in 0..n {
        edges.push((gm.s_y(y), gm.t_y(y)));
    }
    for (e, &(x, y, z)) in h.triples().iter().enumerate() {
        edges.push((gm.s1(e), gm.t1(e)));
        edges.push((gm.s1(e), gm.t2(e)));
        edges.push((gm.s2(e), gm.t2(e)));
        edges.push((gm.s2(e), gm.t3(e)));
        edges.push((gm.s_x(x), gm.t1(e)));
        edges.push((gm.s_y(y), gm.t1(e)));
        edges.push((gm.s1(e), gm.t_z(z)));
    }
    let g = BipartiteGraph::new(8 * n, 12 * n, edges).expect("gadget edges are distinct");
    assert_eq!(g.edge_count(), 23 * n);
    for x in 0..n {
        assert_eq!(g.deg_s(gm.s_x(x)), 4);
        assert_eq!(g.deg_t(gm.t_x(x)), 1);
    }
    for y in 0..n {
        assert_eq!(g.deg_s(gm.s_y(y)), 4);
        assert_eq!(g.deg_t(gm.t_y(y)), 1);
    }
    for z in 0..n {
        assert_eq!(g.deg_t(gm.t_z(z)), 3);
    }
    for e in 0..h.triple_count() {
        assert_eq!(g.deg_s(gm.s1(e)), 3);
        assert_eq!(g.deg_s(gm.s2(e)), 2);
        assert_eq!(g.deg_t(gm.t1(e)), 3);
        assert_eq!(g.deg_t(gm.t2(e)), 2);
        assert_eq!(g.deg_t(gm.t3(e)), 1);
    }
    (g, gm)
}

fn check_pairing(h: &ThreeDMInstance, gm: &GadgetMap) -> Result<(), ReductionError> {
    if gm.n != h.part_size() || gm.triples != h.triples() {
        return Err(ReductionError::InvalidInstance(
            "gadget map does not belong to this instance".into(),
        ));
    }
    Ok(())
}

/// Image of a perfect matching: for each chosen triple the two anchors,
/// both t1-connectors and the z-connector plus the path minus t1-s1; for
/// each unchosen triple the whole path. Covers every T-node, V-freely.
pub fn forward_map(
    h: &ThreeDMInstance,
    gm: &GadgetMap,
    matching: &BTreeSet<usize>,
) -> Result<TwoMatching, ReductionError> {
    check_pairing(h, gm)?;
    for &id in matching {
        if id >= h.triple_count() {
            return Err(ReductionError::InvalidInstance(format!("triple id {id} out of range")));
        }
    }
    let n = h.part_size();
    let mut count = [vec![0usize; n], vec![0usize; n], vec![0usize; n]];
    for &id in matching {
        let (x, y, z) = h.triple(id);
        count[0][x] += 1;
        count[1][y] += 1;
        count[2][z] += 1;
    }
    for part in 0..3 {
        for v in 0..n {
            if count[part][v] != 1 {
                let node = [PartNode::X(v), PartNode::Y(v), PartNode::Z(v)][part];
                return Err(ReductionError::NotPerfectMatching { node, count: count[part][v] });
            }
        }
    }

    let (g, _) = reduce_3dm(h);
    let mut edges = Vec::new();
    for e in 0..h.triple_count() {
        let (x, y, z) = h.triple(e);
        if matching.contains(&e) {
            edges.push((gm.s_x(x), gm.t_x(x)));
            edges.push((gm.s_y(y), gm.t_y(y)));
            edges.push((gm.s_x(x), gm.t1(e)));
            edges.push((gm.s_y(y), gm.t1(e)));
            edges.push((gm.s1(e), gm.t_z(z)));
        } else {
            edges.push((gm.s1(e), gm.t1(e)));
        }
        edges.push((gm.s1(e), gm.t2(e)));
        edges.push((gm.s2(e), gm.t2(e)));
        edges.push((gm.s2(e), gm.t3(e)));
    }
    let tm = TwoMatching::new(&g, edges).expect("gadget image respects degree caps");
    debug_assert!(tm.is_v_free(&g));
    debug_assert_eq!(tm.covered_t(), (0..g.t_count()).collect());
    Ok(tm)
}

/// Reads a perfect matching back out of a V-free 2-matching covering the
/// whole T side: after normalising each path (its s1-t2 and s2-t3 edges
/// are forced; t2-s2 is inserted when absent), triple e is chosen exactly
/// when the connector s1-t_z lies in the cover.
pub fn lift_solution(
    h: &ThreeDMInstance,
    gm: &GadgetMap,
    cover: &TwoMatching,
) -> Result<BTreeSet<usize>, ReductionError> {
    check_pairing(h, gm)?;
    let (g, _) = reduce_3dm(h);
    for &(s, t) in cover.edges() {
        if s >= g.s_count() || t >= g.t_count() || !g.has_edge(s, t) {
            return Err(ReductionError::InvalidInstance(format!(
                "cover uses edge ({s}, {t}) absent from the reduced graph"
            )));
        }
    }
    if let Some(v) = cover.v_path(&g) {
        return Err(ReductionError::NotVFree { center: v.nodes[1].index });
    }
    let covered = cover.covered_t();
    for t in 0..g.t_count() {
        if !covered.contains(&t) {
            return Err(ReductionError::CoverageGap(t));
        }
    }

    let mut m: BTreeSet<(usize, usize)> = cover.edges().iter().copied().collect();
    for e in 0..h.triple_count() {
        // Coverage of t3 forces s2-t3; with it, skipping s1-t2 would leave
        // the V-path t2-s2-t3, so s1-t2 is forced as well.
        if !m.contains(&(gm.s1(e), gm.t2(e))) {
            return Err(ReductionError::TheoremViolation(format!(
                "cover misses the forced edge s1-t2 of triple {e}"
            )));
        }
        if !m.contains(&(gm.s2(e), gm.t3(e))) {
            return Err(ReductionError::TheoremViolation(format!(
                "cover misses the forced edge s2-t3 of triple {e}"
            )));
        }
        m.insert((gm.s2(e), gm.t2(e)));
        if !m.contains(&(gm.s1(e), gm.t1(e))) {
            // V-freeness at the anchor pins both t1-connectors.
            let (x, y, _) = h.triple(e);
            debug_assert!(m.contains(&(gm.s_x(x), gm.t1(e))));
            debug_assert!(m.contains(&(gm.s_y(y), gm.t1(e))));
        }
    }

    let mut chosen = BTreeSet::new();
    let n = h.part_size();
    let mut count = [vec![0usize; n], vec![0usize; n], vec![0usize; n]];
    for e in 0..h.triple_count() {
        let (x, y, z) = h.triple(e);
        if m.contains(&(gm.s1(e), gm.t_z(z))) {
            chosen.insert(e);
            count[0][x] += 1;
            count[1][y] += 1;
            count[2][z] += 1;
        }
    }
    for part in 0..3 {
        for v in 0..n {
            if count[part][v] != 1 {
                let node = [PartNode::X(v), PartNode::Y(v), PartNode::Z(v)][part];
                return Err(ReductionError::TheoremViolation(format!(
                    "lifted set is not a perfect matching: {node} lies in {} chosen triples",
                    count[part][v]
                )));
            }
        }
    }
    Ok(chosen)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n1() -> ThreeDMInstance {
        ThreeDMInstance::new(1, vec![(0, 0, 0); 3]).unwrap()
    }

    fn n2() -> ThreeDMInstance {
        ThreeDMInstance::new(
            2,
            vec![(0, 0, 0), (1, 1, 1), (0, 1, 1), (1, 0, 0), (0, 0, 1), (1, 1, 0)],
        )
        .unwrap()
    }

    /// 3-regular but without a perfect matching.
    fn n3_no() -> ThreeDMInstance {
        ThreeDMInstance::new(
            3,
            vec![
                (0, 0, 0),
                (0, 0, 0),
                (1, 1, 1),
                (1, 1, 1),
                (2, 2, 0),
                (2, 2, 1),
                (1, 0, 2),
                (2, 1, 2),
                (0, 2, 2),
            ],
        )
        .unwrap()
    }

    #[test]
    fn validation_catches_bad_instances() {
        assert!(matches!(
            ThreeDMInstance::new(1, vec![(0, 0, 0); 2]),
            Err(ReductionError::InvalidInstance(_))
        ));
        assert!(matches!(
            ThreeDMInstance::new(1, vec![(0, 0, 0), (0, 0, 0), (0, 1, 0)]),
            Err(ReductionError::InvalidInstance(_))
        ));
        let e = ThreeDMInstance::new(2, vec![(0, 0, 0), (0, 0, 0), (0, 0, 0), (1, 1, 1), (1, 1, 1), (1, 1, 1)])
            .map(|_| ());
        assert_eq!(e, Ok(()));
        let e = ThreeDMInstance::new(2, vec![(0, 0, 0); 6]).unwrap_err();
        assert!(e.to_string().contains("x0 lies in 6 triples"));
    }

    #[test]
    fn reduction_counts_n1() {
        let (g, gm) = reduce_3dm(&n1());
        assert_eq!(g.s_count(), 8);
        assert_eq!(g.t_count(), 12);
        assert_eq!(g.edge_count(), 23);
        assert_eq!(g.deg_s(gm.s_x(0)), 4);
        assert_eq!(g.deg_s(gm.s_y(0)), 4);
        for s in 2..8 {
            assert!(g.deg_s(s) < 4);
        }
    }

    #[test]
    fn reduction_counts_n2() {
        let (g, _) = reduce_3dm(&n2());
        assert_eq!(g.s_count() + g.t_count(), 40);
        assert_eq!(g.edge_count(), 46);
    }

    #[test]
    fn forward_map_n1_shape() {
        let h = n1();
        let (g, gm) = reduce_3dm(&h);
        let tm = forward_map(&h, &gm, &[0].into_iter().collect()).unwrap();
        assert_eq!(tm.len(), 16);
        assert!(tm.is_v_free(&g));
        assert_eq!(tm.covered_t().len(), 12);
    }

    #[test]
    fn forward_map_rejects_non_matchings() {
        let h = n1();
        let (_, gm) = reduce_3dm(&h);
        assert_eq!(
            forward_map(&h, &gm, &[0, 1].into_iter().collect()),
            Err(ReductionError::NotPerfectMatching { node: PartNode::X(0), count: 2 })
        );
        assert_eq!(
            forward_map(&h, &gm, &BTreeSet::new()),
            Err(ReductionError::NotPerfectMatching { node: PartNode::X(0), count: 0 })
        );
    }

    #[test]
    fn round_trip_n1_and_n2() {
        for h in [n1(), n2()] {
            let (_, gm) = reduce_3dm(&h);
            let pm = h.find_perfect_matching().unwrap();
            let tm = forward_map(&h, &gm, &pm).unwrap();
            assert_eq!(lift_solution(&h, &gm, &tm).unwrap(), pm);
        }
        let h = n2();
        let (_, gm) = reduce_3dm(&h);
        let alt: BTreeSet<usize> = [2, 3].into_iter().collect();
        let tm = forward_map(&h, &gm, &alt).unwrap();
        assert_eq!(lift_solution(&h, &gm, &tm).unwrap(), alt);
    }

    #[test]
    fn lift_rejects_coverage_gap() {
        let h = n1();
        let (g, gm) = reduce_3dm(&h);
        let tm = forward_map(&h, &gm, &[0].into_iter().collect()).unwrap();
        let edges: Vec<(usize, usize)> = tm
            .edges()
            .iter()
            .copied()
            .filter(|&e| e != (gm.s1(0), gm.t_z(0)))
            .collect();
        let broken = TwoMatching::new(&g, edges).unwrap();
        assert_eq!(lift_solution(&h, &gm, &broken), Err(ReductionError::CoverageGap(gm.t_z(0))));
    }

    #[test]
    fn lift_rejects_v_paths() {
        let h = n1();
        let (g, gm) = reduce_3dm(&h);
        let v = TwoMatching::new(&g, vec![(gm.s_x(0), gm.t_x(0)), (gm.s_x(0), gm.t1(0))]).unwrap();
        assert_eq!(lift_solution(&h, &gm, &v), Err(ReductionError::NotVFree { center: 0 }));
    }

    #[test]
    fn perfect_matching_search() {
        assert_eq!(n1().find_perfect_matching(), Some([0].into_iter().collect()));
        assert!(n2().has_perfect_matching());
        assert!(!n3_no().has_perfect_matching());
    }

    #[test]
    fn no_instance_reduces_cleanly() {
        let (g, _) = reduce_3dm(&n3_no());
        assert_eq!(g.s_count(), 24);
        assert_eq!(g.t_count(), 36);
        assert_eq!(g.edge_count(), 69);
    }

    #[test]
    fn sidecar_lists_every_node_and_edge() {
        let h = n1();
        let (g, gm) = reduce_3dm(&h);
        let text = gm.sidecar(&g);
        let lines: Vec<&str> = text.lines().collect();
        let content = lines.iter().filter(|l| !l.starts_with('#')).count();
        assert_eq!(content, 20 + 23);
        assert!(lines.contains(&"0 s_x 0"));
        assert!(lines.contains(&"2 s1 0"));
        assert!(text.contains("conn_z 2"));
    }

    #[test]
    fn gadget_map_rejects_foreign_instances() {
        let (_, gm) = reduce_3dm(&n1());
        let other = n2();
        assert!(matches!(
            forward_map(&other, &gm, &BTreeSet::new()),
            Err(ReductionError::InvalidInstance(_))
        ));
    }
}
