//! Small exhaustive reference oracles.
//!
//! Every oracle answers by brute force, independently of the production
//! solvers, and refuses instances larger than its budget instead of running
//! unbounded searches.

mod extended;
mod nu;
mod vfree;

pub use extended::oracle_extended_matching;
pub use nu::{oracle_ge_d_set, oracle_nu};
pub use vfree::oracle_vfree_cover;

use std::time::Duration;

use thiserror::Error;

/// Size and time caps for the exhaustive oracles.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Edge-count cap for the V-free cover search.
    pub max_edges: usize,
    /// Node-count cap for the matching-number and extended-matching searches.
    pub max_nodes: usize,
    /// Wall-clock cap per oracle call.
    pub time_limit: Duration,
}

impl Default for OracleBudget {
    fn default() -> OracleBudget {
        OracleBudget {
            max_edges: 26,
            max_nodes: 12,
            time_limit: Duration::from_secs(60),
        }
    }
}

impl OracleBudget {
    /// The default budget with a different edge cap.
    pub fn with_max_edges(max_edges: usize) -> OracleBudget {
        OracleBudget { max_edges, ..OracleBudget::default() }
    }
}

/// Budget refusal; the message names the exhausted resource.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle budget exceeded: {0}")]
    BudgetExceeded(String),
}

pub(crate) fn check_budget(what: &str, actual: usize, cap: usize) -> Result<(), OracleError> {
    if actual > cap {
        return Err(OracleError::BudgetExceeded(format!("{what} {actual} exceeds cap {cap}")));
    }
    Ok(())
}
