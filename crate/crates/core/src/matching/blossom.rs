//! Maximum matching in general graphs via blossom contraction.
//!
//! The search keeps, per phase, a parent array over inner nodes, a base
//! array mapping every node to the base of its contracted blossom, and an
//! outer mark (`used`). The same search doubles as the labelling pass for
//! the Gallai-Edmonds decomposition: after the matching is maximum, the set
//! of outer nodes over all exposed roots is exactly the set of nodes missed
//! by some maximum matching.

use crate::graph::Multigraph;

use super::GeneralMatching;

pub(crate) const NONE: usize = usize::MAX;

pub(crate) struct BlossomState {
    n: usize,
    adj: Vec<Vec<usize>>,
    pub(crate) mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    pub(crate) outer: Vec<bool>,
}

impl BlossomState {
    pub(crate) fn new(g: &Multigraph) -> BlossomState {
        BlossomState {
            n: g.node_count(),
            adj: g.support_adjacency(),
            mate: vec![NONE; g.node_count()],
            parent: vec![NONE; g.node_count()],
            base: (0..g.node_count()).collect(),
            outer: vec![false; g.node_count()],
        }
    }

    /// Runs phases from every exposed node in id order until no augmenting
    /// path remains.
    pub(crate) fn run(&mut self) {
        for v in 0..self.n {
            if self.mate[v] == NONE {
                self.search(v);
            }
        }
    }

    fn lca(&self, a: usize, b: usize) -> usize {
        let mut seen = vec![false; self.n];
        let mut v = a;
        loop {
            v = self.base[v];
            seen[v] = true;
            if self.mate[v] == NONE {
                break;
            }
            v = self.parent[self.mate[v]];
        }
        let mut v = b;
        loop {
            v = self.base[v];
            if seen[v] {
                return v;
            }
            v = self.parent[self.mate[v]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize, in_blossom: &mut [bool]) {
        while self.base[v] != b {
            in_blossom[self.base[v]] = true;
            in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// One alternating-tree search from `root`. Returns true when it
    /// augmented the matching. When it returns false, `outer` holds the
    /// nodes reachable from `root` by even alternating paths.
    pub(crate) fn search(&mut self, root: usize) -> bool {
        self.parent.fill(NONE);
        self.outer.fill(false);
        for i in 0..self.n {
            self.base[i] = i;
        }
        self.outer[root] = true;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for i in 0..self.adj[v].len() {
                let to = self.adj[v][i];
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    // Two outer nodes of one tree meet: contract the blossom.
                    let cur_base = self.lca(v, to);
                    let mut in_blossom = vec![false; self.n];
                    self.mark_path(v, cur_base, to, &mut in_blossom);
                    self.mark_path(to, cur_base, v, &mut in_blossom);
                    for i in 0..self.n {
                        if in_blossom[self.base[i]] {
                            self.base[i] = cur_base;
                            if !self.outer[i] {
                                self.outer[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        // Augmenting path: flip along the tree.
                        let mut u = to;
                        while u != NONE {
                            let pv = self.parent[u];
                            let ppv = self.mate[pv];
                            self.mate[u] = pv;
                            self.mate[pv] = u;
                            u = ppv;
                        }
                        return true;
                    }
                    let m = self.mate[to];
                    if !self.outer[m] {
                        self.outer[m] = true;
                        queue.push_back(m);
                    }
                }
            }
        }
        false
    }
}

/// Maximum matching of a general multigraph. Parallel edges are collapsed
/// before the search; multiplicity never changes the matching number.
pub fn max_matching_general(g: &Multigraph) -> GeneralMatching {
    let mut st = BlossomState::new(g);
    st.run();
    GeneralMatching::from_mate(&st.mate)
}

/// Matching number of a multigraph.
pub(crate) fn nu(g: &Multigraph) -> usize {
    max_matching_general(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Multigraph;

    fn graph(n: usize, pairs: &[(usize, usize)]) -> Multigraph {
        Multigraph::from_pairs(n, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_matches_one() {
        let g = graph(3, &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(max_matching_general(&g).len(), 1);
    }

    #[test]
    fn odd_cycle_with_tail_needs_blossom() {
        // 5-cycle 0..4 plus tail 4-5: perfect matching exists.
        let g = graph(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (4, 5)]);
        let m = max_matching_general(&g);
        assert_eq!(m.len(), 3);
        assert!(m.is_perfect(&g));
    }

    #[test]
    fn petersen_graph_has_perfect_matching() {
        let g = graph(
            10,
            &[
                (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
                (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
            ],
        );
        assert_eq!(max_matching_general(&g).len(), 5);
    }

    #[test]
    fn parallel_edges_do_not_change_nu() {
        let mut g = Multigraph::new(2);
        g.add_edge(0, 1, None).unwrap();
        g.add_edge(0, 1, None).unwrap();
        assert_eq!(max_matching_general(&g).len(), 1);
    }

    #[test]
    fn two_triangles_joined() {
        // Triangles {0,1,2} and {3,4,5} joined by 2-3: perfect.
        let g = graph(6, &[(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (2, 3)]);
        assert_eq!(max_matching_general(&g).len(), 3);
    }

    #[test]
    fn isolated_nodes_and_empty_graph() {
        assert_eq!(max_matching_general(&Multigraph::new(0)).len(), 0);
        assert_eq!(max_matching_general(&Multigraph::new(4)).len(), 0);
    }

    #[test]
    fn matches_exhaustive_nu_on_small_graphs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha12Rng::seed_from_u64(11);
        for _ in 0..300 {
            let n = rng.gen_range(1..=8);
            let mut g = Multigraph::new(n);
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.gen_bool(0.4) {
                        g.add_edge(u, v, None).unwrap();
                    }
                }
            }
            let fast = max_matching_general(&g).len();
            let slow = crate::oracle::oracle_nu(&g, &crate::oracle::OracleBudget::default()).unwrap();
            assert_eq!(fast, slow);
        }
    }
}
