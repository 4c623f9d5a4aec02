//! Exhaustive search for V-free 2-matchings covering a required T-set.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::graph::{BipartiteGraph, TwoMatching};

use super::{check_budget, OracleBudget, OracleError};

/// One coverage pattern for a required T-node: one or two incident edges,
/// identified by their S-endpoints.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Pattern {
    Single(usize),
    Pair(usize, usize),
}

struct Search<'a> {
    g: &'a BipartiteGraph,
    required: Vec<usize>,
    /// Pattern index per required node (position in `required`), or none.
    assigned: Vec<Option<Pattern>>,
    s_load: Vec<usize>,
    /// Chosen T-partners per S-node.
    chosen_at_s: Vec<Vec<usize>>,
    /// Chosen degree per T-node (pattern size once assigned).
    t_deg: Vec<usize>,
    deadline: Instant,
    nodes_expanded: u64,
}

impl<'a> Search<'a> {
    /// A single edge (s, t) closes a V-path exactly when s already carries
    /// one chosen edge to a degree-1 T-node: the component would be the
    /// 2-edge path t - s - t'. Both T-ends are already assigned then, and no
    /// later assignment can touch t, t' or the saturated s, so the V-path
    /// would be permanent.
    fn single_closes_v(&self, s: usize, _t: usize) -> bool {
        if self.chosen_at_s[s].len() != 1 {
            return false;
        }
        let t_other = self.chosen_at_s[s][0];
        self.t_deg[t_other] == 1
    }

    fn feasible_patterns(&self, t: usize) -> Vec<Pattern> {
        let mut out = Vec::new();
        let nbrs = self.g.adj_t(t);
        for &s in nbrs {
            if self.s_load[s] < 2 && !self.single_closes_v(s, t) {
                out.push(Pattern::Single(s));
            }
        }
        for (i, &s1) in nbrs.iter().enumerate() {
            for &s2 in &nbrs[i + 1..] {
                if self.s_load[s1] < 2 && self.s_load[s2] < 2 {
                    out.push(Pattern::Pair(s1, s2));
                }
            }
        }
        out
    }

    fn apply(&mut self, t: usize, p: Pattern) {
        let ss: Vec<usize> = match p {
            Pattern::Single(s) => vec![s],
            Pattern::Pair(a, b) => vec![a, b],
        };
        for s in ss {
            self.s_load[s] += 1;
            self.chosen_at_s[s].push(t);
            self.t_deg[t] += 1;
        }
    }

    fn undo(&mut self, t: usize, p: Pattern) {
        let ss: Vec<usize> = match p {
            Pattern::Single(s) => vec![s],
            Pattern::Pair(a, b) => vec![a, b],
        };
        for s in ss {
            self.s_load[s] -= 1;
            let pos = self.chosen_at_s[s].iter().rposition(|&x| x == t).unwrap();
            self.chosen_at_s[s].remove(pos);
            self.t_deg[t] -= 1;
        }
    }

    fn rec(&mut self) -> Result<bool, OracleError> {
        self.nodes_expanded += 1;
        if self.nodes_expanded % 256 == 0 && Instant::now() > self.deadline {
            return Err(OracleError::BudgetExceeded("time limit".into()));
        }
        // Most-constrained required node first, ties by lowest id.
        let mut pick: Option<(usize, Vec<Pattern>)> = None;
        for (i, &t) in self.required.iter().enumerate() {
            if self.assigned[i].is_some() {
                continue;
            }
            let pats = self.feasible_patterns(t);
            // Iteration order is ascending, so ties keep the lowest id.
            let better = match &pick {
                None => true,
                Some((_, best)) => pats.len() < best.len(),
            };
            if better {
                let empty = pats.is_empty();
                pick = Some((i, pats));
                if empty {
                    break;
                }
            }
        }
        let (i, pats) = match pick {
            None => return Ok(true),
            Some(x) => x,
        };
        if pats.is_empty() {
            return Ok(false);
        }
        let t = self.required[i];
        for p in pats {
            self.apply(t, p);
            self.assigned[i] = Some(p);
            if self.rec()? {
                return Ok(true);
            }
            self.assigned[i] = None;
            self.undo(t, p);
        }
        Ok(false)
    }
}

/// Searches for a V-free 2-matching of `g` covering every T-node in
/// `required`. Returns a witness on success, `None` when provably none
/// exists, and a budget error when the instance exceeds the caps.
///
/// Completeness rests on a normal form: any V-free cover restricted to the
/// edges incident to required T-nodes is still a V-free cover, so searching
/// over per-node coverage patterns loses nothing.
pub fn oracle_vfree_cover(
    g: &BipartiteGraph,
    required: &BTreeSet<usize>,
    budget: &OracleBudget,
) -> Result<Option<TwoMatching>, OracleError> {
    check_budget("edge count", g.edge_count(), budget.max_edges)?;
    for &t in required {
        assert!(t < g.t_count(), "required t{t} out of range");
    }
    let required: Vec<usize> = required.iter().copied().collect();
    let mut search = Search {
        g,
        assigned: vec![None; required.len()],
        required,
        s_load: vec![0; g.s_count()],
        chosen_at_s: vec![Vec::new(); g.s_count()],
        t_deg: vec![0; g.t_count()],
        deadline: Instant::now() + budget.time_limit,
        nodes_expanded: 0,
    };
    if !search.rec()? {
        return Ok(None);
    }
    let mut edges = Vec::new();
    for (s, ts) in search.chosen_at_s.iter().enumerate() {
        for &t in ts {
            edges.push((s, t));
        }
    }
    let witness = TwoMatching::new(g, edges).expect("search respects the degree caps");
    debug_assert!(witness.is_v_free(g));
    debug_assert!(search.required.iter().all(|t| witness.covered_t().contains(t)));
    Ok(Some(witness))
}
