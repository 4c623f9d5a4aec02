//! Exhaustive search for extended matchings covering a required node set.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::extended::{verify_extended_matching, ExtendedMatching, ExtendedPair};
use crate::graph::Hypergraph;

use super::{check_budget, OracleBudget, OracleError};

struct Search<'a> {
    h: &'a Hypergraph,
    required: Vec<usize>,
    covered: Vec<bool>,
    chosen: ExtendedMatching,
    /// pair_witness[u][v]: lowest hyperedge containing both, if any.
    pair_witness: Vec<Vec<Option<usize>>>,
    deadline: Instant,
    steps: u64,
}

impl<'a> Search<'a> {
    /// Branches on the elements that could cover the first uncovered
    /// required node; the element orderings make the found witness
    /// deterministic.
    fn rec(&mut self) -> Result<bool, OracleError> {
        self.steps += 1;
        if self.steps % 256 == 0 && Instant::now() > self.deadline {
            return Err(OracleError::BudgetExceeded("time limit".into()));
        }
        let v = match self.required.iter().copied().find(|&v| !self.covered[v]) {
            None => return Ok(true),
            Some(v) => v,
        };
        for id in 0..self.h.hyperedge_count() {
            let e = self.h.hyperedge(id);
            if e.binary_search(&v).is_err() || e.iter().any(|&w| self.covered[w]) {
                continue;
            }
            for &w in e {
                self.covered[w] = true;
            }
            self.chosen.hyperedges.push(id);
            if self.rec()? {
                return Ok(true);
            }
            self.chosen.hyperedges.pop();
            for &w in e {
                self.covered[w] = false;
            }
        }
        for u in 0..self.h.node_count() {
            if u == v || self.covered[u] {
                continue;
            }
            let (a, b) = (u.min(v), u.max(v));
            let witness = match self.pair_witness[a][b] {
                None => continue,
                Some(w) => w,
            };
            self.covered[u] = true;
            self.covered[v] = true;
            self.chosen.pairs.push(ExtendedPair { u: a, v: b, witness });
            if self.rec()? {
                return Ok(true);
            }
            self.chosen.pairs.pop();
            self.covered[u] = false;
            self.covered[v] = false;
        }
        Ok(false)
    }
}

/// Searches every extended matching of `h` for one covering `required`.
/// Returns a witness or `None`; refuses instances above the node budget.
pub fn oracle_extended_matching(
    h: &Hypergraph,
    required: &BTreeSet<usize>,
    budget: &OracleBudget,
) -> Result<Option<ExtendedMatching>, OracleError> {
    check_budget("node count", h.node_count(), budget.max_nodes)?;
    for &v in required {
        assert!(v < h.node_count(), "required node {v} out of range");
    }
    let n = h.node_count();
    let mut pair_witness = vec![vec![None; n]; n];
    for (id, e) in h.hyperedges().iter().enumerate() {
        for (i, &a) in e.iter().enumerate() {
            for &b in &e[i + 1..] {
                if pair_witness[a][b].is_none() {
                    pair_witness[a][b] = Some(id);
                }
            }
        }
    }
    let mut search = Search {
        h,
        required: required.iter().copied().collect(),
        covered: vec![false; n],
        chosen: ExtendedMatching::empty(),
        pair_witness,
        deadline: Instant::now() + budget.time_limit,
        steps: 0,
    };
    if !search.rec()? {
        return Ok(None);
    }
    let mut em = search.chosen;
    em.normalize();
    debug_assert!(verify_extended_matching(h, &em, required).is_empty());
    Ok(Some(em))
}
