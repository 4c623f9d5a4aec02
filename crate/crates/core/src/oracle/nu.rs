//! Exhaustive matching number and the brute-force Gallai-Edmonds D-set.

use std::collections::BTreeSet;
use std::time::Instant;

use crate::graph::Multigraph;

use super::{check_budget, OracleBudget, OracleError};

/// Matching number by exhaustive search with memoization on the set of
/// still-free nodes: the lowest free node is either left exposed or matched
/// to each free neighbour in turn.
pub fn oracle_nu(g: &Multigraph, budget: &OracleBudget) -> Result<usize, OracleError> {
    let n = g.node_count();
    check_budget("node count", n, budget.max_nodes)?;
    let start = Instant::now();
    let adj_masks: Vec<u32> = {
        let adj = g.support_adjacency();
        (0..n).map(|v| adj[v].iter().fold(0u32, |m, &w| m | (1 << w))).collect()
    };
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    let mut memo = vec![u8::MAX; (full as usize) + 1];

    fn rec(
        mask: u32,
        adj: &[u32],
        memo: &mut [u8],
        start: &Instant,
        limit: std::time::Duration,
    ) -> Result<u8, OracleError> {
        if mask == 0 {
            return Ok(0);
        }
        if memo[mask as usize] != u8::MAX {
            return Ok(memo[mask as usize]);
        }
        if start.elapsed() > limit {
            return Err(OracleError::BudgetExceeded("time limit".into()));
        }
        let v = mask.trailing_zeros() as usize;
        let without_v = mask & !(1 << v);
        let mut best = rec(without_v, adj, memo, start, limit)?;
        let mut nbrs = adj[v] & without_v;
        while nbrs != 0 {
            let w = nbrs.trailing_zeros();
            nbrs &= nbrs - 1;
            let sub = rec(without_v & !(1 << w), adj, memo, start, limit)?;
            best = best.max(sub + 1);
        }
        memo[mask as usize] = best;
        Ok(best)
    }

    rec(full, &adj_masks, &mut memo, &start, budget.time_limit).map(usize::from)
}

/// The set `D` of nodes missed by at least one maximum matching, computed by
/// definition: `v` is in `D` exactly when deleting it leaves the matching
/// number unchanged.
pub fn oracle_ge_d_set(g: &Multigraph, budget: &OracleBudget) -> Result<BTreeSet<usize>, OracleError> {
    let base = oracle_nu(g, budget)?;
    let mut d = BTreeSet::new();
    for v in 0..g.node_count() {
        let keep: Vec<usize> = (0..g.node_count()).filter(|&u| u != v).collect();
        let (sub, _) = g.induced(&keep);
        if oracle_nu(&sub, budget)? == base {
            d.insert(v);
        }
    }
    Ok(d)
}
