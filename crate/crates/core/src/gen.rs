//! Seeded instance generators. Every function is a pure map from its
//! parameters and a u64 seed to one instance, driven by ChaCha12, so the
//! same call reproduces the same instance on any platform.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;
use thiserror::Error;

use crate::graph::{BipartiteGraph, Hypergraph, Multigraph};
use crate::reduce3dm::ThreeDMInstance;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),
}

fn rng_for(seed: u64) -> ChaCha12Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

/// Random bipartite graph with an edge kept between each pair with
/// probability `edge_percent` / 100.
pub fn gen_bipartite(s_count: usize, t_count: usize, edge_percent: u32, seed: u64) -> BipartiteGraph {
    let mut rng = rng_for(seed);
    let mut edges = Vec::new();
    for s in 0..s_count {
        for t in 0..t_count {
            if rng.gen_range(0..100) < edge_percent {
                edges.push((s, t));
            }
        }
    }
    BipartiteGraph::new(s_count, t_count, edges).expect("generated edges are simple")
}

/// Random multigraph on `n` nodes: each pair carries an edge with
/// probability `edge_percent` / 100, and one kept pair in ten is doubled.
pub fn gen_multigraph(n: usize, edge_percent: u32, seed: u64) -> Multigraph {
    let mut rng = rng_for(seed);
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_range(0..100) < edge_percent {
                pairs.push((u, v));
                if rng.gen_range(0..10) == 0 {
                    pairs.push((u, v));
                }
            }
        }
    }
    Multigraph::from_pairs(n, pairs).expect("pairs are in range")
}

/// Random bipartite instance within the degree bounds d(s) ≤ 4, d(t) ≤ 3,
/// biased so that most T-nodes reach degree 3.
pub fn gen_liang(s_count: usize, t_count: usize, seed: u64) -> BipartiteGraph {
    let mut rng = rng_for(seed);
    let mut s_load = vec![0usize; s_count];
    let mut edges = Vec::new();
    for t in 0..t_count {
        // Degree weights 3:1:1:1 toward full T-nodes keeps the solver's
        // interesting branch exercised.
        let want = match rng.gen_range(0..6) {
            0 => 0,
            1 => 1,
            2 => 2,
            _ => 3,
        };
        let mut open: Vec<usize> = (0..s_count).filter(|&s| s_load[s] < 4).collect();
        open.shuffle(&mut rng);
        for &s in open.iter().take(want) {
            s_load[s] += 1;
            edges.push((s, t));
        }
    }
    BipartiteGraph::new(s_count, t_count, edges).expect("generated edges are simple")
}

/// Random k-uniform r-regular hypergraph on `n` nodes via the configuration
/// model: `n * r` node stubs shuffled and cut into k-sets, resampling until
/// no hyperedge repeats a node.
pub fn gen_hypergraph_regular(
    n: usize,
    k: usize,
    r: usize,
    seed: u64,
) -> Result<Hypergraph, GenError> {
    if k == 0 {
        return Err(GenError::InfeasibleParams("hyperedge size 0".into()));
    }
    if (n * r) % k != 0 {
        return Err(GenError::InfeasibleParams(format!(
            "{n} nodes of degree {r} leave {} stubs, not divisible by {k}",
            n * r
        )));
    }
    if k > n && r > 0 {
        return Err(GenError::InfeasibleParams(format!(
            "hyperedges of size {k} need at least {k} nodes, have {n}"
        )));
    }
    let mut rng = rng_for(seed);
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, r)).collect();
    'attempt: for _ in 0..10_000 {
        stubs.shuffle(&mut rng);
        let mut hyperedges = Vec::with_capacity(stubs.len() / k);
        for chunk in stubs.chunks(k) {
            let mut e = chunk.to_vec();
            e.sort_unstable();
            if e.windows(2).any(|w| w[0] == w[1]) {
                continue 'attempt;
            }
            hyperedges.push(e);
        }
        let h = Hypergraph::new(n, hyperedges).expect("chunks are valid hyperedges");
        debug_assert!((0..n).all(|v| h.degree(v) == r));
        return Ok(h);
    }
    Err(GenError::InfeasibleParams(format!(
        "no collision-free configuration found for n={n}, k={k}, r={r}"
    )))
}

fn random_permutation(n: usize, rng: &mut ChaCha12Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Random tripartite 3-regular instance: the union of three permutation
/// systems. Always has a perfect matching (each system is one).
pub fn gen_threedm(n: usize, seed: u64) -> ThreeDMInstance {
    let mut rng = rng_for(seed);
    let mut triples = Vec::with_capacity(3 * n);
    for _ in 0..3 {
        let sigma = random_permutation(n, &mut rng);
        let tau = random_permutation(n, &mut rng);
        for x in 0..n {
            triples.push((x, sigma[x], tau[x]));
        }
    }
    ThreeDMInstance::new(n, triples).expect("permutation systems are 3-regular")
}

/// Random tripartite 3-regular instance without a perfect matching, found
/// by scrambling permutation systems with component swaps until the
/// exhaustive check confirms a NO. Instances with n ≤ 2 always have a
/// perfect matching, so those parameters are rejected.
pub fn gen_threedm_no(n: usize, seed: u64) -> Result<ThreeDMInstance, GenError> {
    if n <= 2 {
        return Err(GenError::InfeasibleParams(format!(
            "every 3-regular instance with part size {n} has a perfect matching"
        )));
    }
    let mut rng = rng_for(seed);
    for _ in 0..2_000 {
        let mut triples = gen_threedm(n, rng.gen()).triples().to_vec();
        for _ in 0..4 * n {
            let a = rng.gen_range(0..triples.len());
            let b = rng.gen_range(0..triples.len());
            if a == b {
                continue;
            }
            if rng.gen_range(0..2) == 0 {
                let (ya, yb) = (triples[a].1, triples[b].1);
                triples[a].1 = yb;
                triples[b].1 = ya;
            } else {
                let (za, zb) = (triples[a].2, triples[b].2);
                triples[a].2 = zb;
                triples[b].2 = za;
            }
        }
        let inst = ThreeDMInstance::new(n, triples).expect("swaps preserve regularity");
        if !inst.has_perfect_matching() {
            return Ok(inst);
        }
    }
    Err(GenError::InfeasibleParams(format!(
        "no perfect-matching-free instance found for n={n} under this seed"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bipartite_is_deterministic() {
        let a = gen_bipartite(6, 6, 40, 9);
        let b = gen_bipartite(6, 6, 40, 9);
        assert_eq!(a, b);
        assert_ne!(a, gen_bipartite(6, 6, 40, 10));
    }

    #[test]
    fn liang_respects_degree_bounds() {
        for seed in 0..20 {
            let g = gen_liang(10, 12, seed);
            for s in 0..10 {
                assert!(g.deg_s(s) <= 4);
            }
            for t in 0..12 {
                assert!(g.deg_t(t) <= 3);
            }
        }
    }

    #[test]
    fn liang_produces_full_t_nodes() {
        let g = gen_liang(12, 12, 3);
        assert!((0..12).any(|t| g.deg_t(t) == 3));
    }

    #[test]
    fn regular_hypergraph_has_uniform_degrees() {
        let h = gen_hypergraph_regular(12, 3, 4, 1).unwrap();
        assert_eq!(h.hyperedge_count(), 16);
        for v in 0..12 {
            assert_eq!(h.degree(v), 4);
        }
        assert!(h.is_oddly_uniform());
    }

    #[test]
    fn regular_hypergraph_rejects_bad_params() {
        assert!(matches!(
            gen_hypergraph_regular(5, 3, 1, 0),
            Err(GenError::InfeasibleParams(_))
        ));
        assert!(matches!(
            gen_hypergraph_regular(2, 3, 3, 0),
            Err(GenError::InfeasibleParams(_))
        ));
    }

    #[test]
    fn threedm_is_three_regular_and_solvable() {
        let inst = gen_threedm(3, 2);
        assert_eq!(inst.triple_count(), 9);
        assert!(inst.has_perfect_matching());
    }

    #[test]
    fn threedm_no_has_no_perfect_matching() {
        let inst = gen_threedm_no(3, 0).unwrap();
        assert!(!inst.has_perfect_matching());
        assert!(matches!(gen_threedm_no(2, 0), Err(GenError::InfeasibleParams(_))));
    }

    #[test]
    fn multigraph_generation_is_deterministic() {
        let a = gen_multigraph(8, 35, 17);
        let b = gen_multigraph(8, 35, 17);
        assert_eq!(a.edges(), b.edges());
    }
}
