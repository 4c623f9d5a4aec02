//! Benchmark crate: fixed instance builders shared by the criterion
//! benches, kept out of the library proper.

use vfree_core::gen::{gen_hypergraph_regular, gen_liang, gen_multigraph};
use vfree_core::{BipartiteGraph, Hypergraph, Multigraph};

/// Degree-bounded bipartite instance of a given scale.
pub fn liang_instance(scale: usize) -> BipartiteGraph {
    gen_liang(10 * scale, 10 * scale, 0xbe5c + scale as u64)
}

/// Random multigraph with around 35% density.
pub fn blossom_instance(n: usize) -> Multigraph {
    gen_multigraph(n, 35, 0xb105 + n as u64)
}

/// 3-uniform 4-regular hypergraph on `n` nodes (n divisible by 3).
pub fn hypergraph_instance(n: usize) -> Hypergraph {
    gen_hypergraph_regular(n, 3, 4, 0x4e9 + n as u64).expect("parameters are feasible")
}
