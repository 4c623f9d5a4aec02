//! Randomised round trips through the text formats: whatever the writers
//! produce, the readers must reconstruct exactly.

use proptest::prelude::*;

use vfree_core::gen::gen_threedm;
use vfree_core::io::{
    read_bipartite, read_certificate, read_hypergraph, read_threedm, write_bipartite,
    write_hypergraph, write_liang_certificate, write_threedm,
};
use vfree_core::{BipartiteGraph, Hypergraph, SLink};

fn bipartite() -> impl Strategy<Value = BipartiteGraph> {
    (1usize..8, 1usize..8)
        .prop_flat_map(|(s, t)| {
            let edges = proptest::collection::btree_set((0..s, 0..t), 0..=s * t);
            (Just(s), Just(t), edges)
        })
        .prop_map(|(s, t, edges)| {
            BipartiteGraph::new(s, t, edges.into_iter().collect()).unwrap()
        })
}

fn hypergraph() -> impl Strategy<Value = Hypergraph> {
    (1usize..10)
        .prop_flat_map(|n| {
            let edge = proptest::collection::btree_set(0..n, 0..=n);
            let edges = proptest::collection::vec(edge, 0..6);
            (Just(n), edges)
        })
        .prop_map(|(n, edges)| {
            let edges = edges.into_iter().map(|e| e.into_iter().collect()).collect();
            Hypergraph::new(n, edges).unwrap()
        })
}

proptest! {
    #[test]
    fn bipartite_round_trip(g in bipartite()) {
        prop_assert_eq!(read_bipartite(&write_bipartite(&g)).unwrap(), g);
    }

    #[test]
    fn hypergraph_round_trip(h in hypergraph()) {
        prop_assert_eq!(read_hypergraph(&write_hypergraph(&h)).unwrap(), h);
    }

    #[test]
    fn threedm_round_trip(n in 1usize..5, seed in any::<u64>()) {
        let inst = gen_threedm(n, seed);
        prop_assert_eq!(read_threedm(&write_threedm(&inst)).unwrap(), inst);
    }

    #[test]
    fn liang_certificate_round_trip(
        edges in proptest::collection::btree_set((0usize..20, 0usize..20), 0..15),
        raw_links in proptest::collection::btree_set((0usize..20, 0usize..20, 0usize..20), 0..8),
    ) {
        let edges: Vec<(usize, usize)> = edges.into_iter().collect();
        // Normalisation can collapse distinct raw triples, so dedup first.
        let links: Vec<SLink> = raw_links
            .into_iter()
            .filter(|&(u, _, w)| u != w)
            .map(|(u, c, w)| SLink::new(u, c, w).unwrap())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        let cert = read_certificate(&write_liang_certificate(&edges, &links)).unwrap();
        prop_assert_eq!(cert.edges, edges);
        prop_assert_eq!(cert.links, links);
    }
}
