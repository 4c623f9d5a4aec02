//! Gallai-Edmonds decomposition of a multigraph.

use std::collections::BTreeSet;

use crate::graph::Multigraph;

use super::blossom::{nu, BlossomState, NONE};
use super::GeneralMatching;

/// The decomposition (D, A, C) together with a maximum matching that
/// realizes its structure: C is matched perfectly within itself, every
/// A-node is matched into a distinct D-component, and each D-component is
/// matched near-perfectly.
#[derive(Clone, Debug)]
pub struct GallaiEdmonds {
    /// Nodes missed by at least one maximum matching.
    pub d: BTreeSet<usize>,
    /// Neighbours of D outside D.
    pub a: BTreeSet<usize>,
    /// Everything else.
    pub c: BTreeSet<usize>,
    /// Connected components of G[D], each sorted, ordered by smallest node.
    pub d_components: Vec<Vec<usize>>,
    pub matching: GeneralMatching,
}

impl GallaiEdmonds {
    /// Index of the D-component containing `v`, if any.
    pub fn component_of(&self, v: usize) -> Option<usize> {
        self.d_components.iter().position(|k| k.binary_search(&v).is_ok())
    }
}

/// Computes the decomposition. D is read off the blossom search forest: once
/// the matching is maximum, a node is missed by some maximum matching
/// exactly when it is outer-reachable from an exposed node.
pub fn gallai_edmonds(g: &Multigraph) -> GallaiEdmonds {
    let n = g.node_count();
    let mut st = BlossomState::new(g);
    st.run();
    let mut in_d = vec![false; n];
    for root in 0..n {
        if st.mate[root] != NONE {
            continue;
        }
        let augmented = st.search(root);
        assert!(!augmented, "augmenting path found after maximality");
        for v in 0..n {
            if st.outer[v] {
                in_d[v] = true;
            }
        }
    }
    let adj = g.support_adjacency();
    let d: BTreeSet<usize> = (0..n).filter(|&v| in_d[v]).collect();
    let a: BTreeSet<usize> = (0..n)
        .filter(|&v| !in_d[v] && adj[v].iter().any(|&w| in_d[w]))
        .collect();
    let c: BTreeSet<usize> = (0..n).filter(|&v| !in_d[v] && !a.contains(&v)).collect();

    let mut d_components = Vec::new();
    let mut seen = vec![false; n];
    for &start in &d {
        if seen[start] {
            continue;
        }
        let mut comp = vec![start];
        seen[start] = true;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if in_d[w] && !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    stack.push(w);
                }
            }
        }
        comp.sort_unstable();
        d_components.push(comp);
    }

    let ge = GallaiEdmonds {
        d,
        a,
        c,
        d_components,
        matching: GeneralMatching::from_mate(&st.mate),
    };
    if cfg!(debug_assertions) || n <= 24 {
        assert_valid(g, &ge);
    }
    ge
}

/// Structure-theorem checks: odd factor-critical components, a perfect
/// matching inside C, and the exposed matching tying A to distinct
/// D-components. Panics on violation; this guards the decomposition itself,
/// not caller input.
fn assert_valid(g: &Multigraph, ge: &GallaiEdmonds) {
    let n = g.node_count();
    assert_eq!(ge.d.len() + ge.a.len() + ge.c.len(), n);
    assert_eq!(ge.d_components.iter().map(|k| k.len()).sum::<usize>(), ge.d.len());

    for k in &ge.d_components {
        assert!(k.len() % 2 == 1, "even D-component {k:?}");
        let (sub, _) = g.induced(k);
        let target = (k.len() - 1) / 2;
        assert_eq!(nu(&sub), target, "D-component not hypomatchable");
        for drop in 0..k.len() {
            let rest: Vec<usize> = (0..k.len()).filter(|&i| i != drop).map(|i| k[i]).collect();
            let (sub, _) = g.induced(&rest);
            assert_eq!(nu(&sub), target, "D-component not factor-critical at {}", k[drop]);
        }
    }

    let c_nodes: Vec<usize> = ge.c.iter().copied().collect();
    let (sub_c, _) = g.induced(&c_nodes);
    assert_eq!(2 * nu(&sub_c), ge.c.len(), "C has no perfect matching");

    let m = &ge.matching;
    let mut hit_components = BTreeSet::new();
    for &a_node in &ge.a {
        let mate = m.mate(a_node).expect("maximum matching must cover A");
        let comp = ge.component_of(mate).expect("A must be matched into D");
        assert!(hit_components.insert(comp), "two A-nodes matched into one D-component");
    }
    for &c_node in &ge.c {
        let mate = m.mate(c_node).expect("maximum matching must cover C");
        assert!(ge.c.contains(&mate), "C-node matched outside C");
    }
    // Berge-Tutte via the decomposition: deficiency = c(D) - |A|.
    assert_eq!(
        2 * m.len(),
        n - (ge.d_components.len() - ge.a.len()),
        "matching size inconsistent with decomposition"
    );
}
