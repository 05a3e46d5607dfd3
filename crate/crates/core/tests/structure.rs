use std::collections::BTreeSet;

use hyperchrom::transforms::{line_graph, max_degree_two_section, two_section};
use hyperchrom::{instances, Hypergraph};
use proptest::prelude::*;

fn hypergraph(max_n: usize, max_m: usize, min_size: usize) -> impl Strategy<Value = Hypergraph> {
    (min_size.max(1)..=max_n).prop_flat_map(move |n| {
        let edge = proptest::collection::btree_set(0..n, min_size.max(1)..=n.min(4));
        proptest::collection::vec(edge, 0..=max_m).prop_map(move |edges: Vec<BTreeSet<usize>>| {
            Hypergraph::new(
                n,
                edges.into_iter().map(|e| e.into_iter().collect::<Vec<_>>()),
            )
            .unwrap()
        })
    })
}

fn linear(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (4..=max_n, 1..=8usize, 2..=3usize, any::<u64>())
        .prop_filter_map("infeasible", |(n, m, k, seed)| {
            instances::random_linear(n, m, k, seed).ok()
        })
}

/// Applies a vertex permutation and reverses the hyperedge list.
fn shuffled(h: &Hypergraph, perm: &[usize]) -> Hypergraph {
    let edges: Vec<Vec<usize>> = h
        .edges()
        .iter()
        .rev()
        .map(|e| e.iter().map(|&x| perm[x]).collect())
        .collect();
    Hypergraph::new(h.vertex_count(), edges).unwrap()
}

proptest! {
    #[test]
    fn edge_degree_bounded_by_incidences(h in hypergraph(8, 10, 1)) {
        let deg = h.vertex_degrees();
        for (i, e) in h.edges().iter().enumerate() {
            let sum: usize = e.iter().map(|&x| deg[x] - 1).sum();
            let d = h.hyperedge_degree(i).unwrap();
            prop_assert!(d <= sum);
            if h.is_linear() {
                prop_assert_eq!(d, sum);
            }
        }
    }

    #[test]
    fn delta2_at_least_antirank_minus_one_times_degree(h in hypergraph(8, 10, 2)) {
        let s = h.stats();
        if let Some(ar) = s.antirank {
            prop_assert!(s.delta2 >= (ar - 1) * s.max_degree);
        }
    }

    #[test]
    fn stats_survive_relabeling(
        (h, perm) in hypergraph(8, 10, 1).prop_flat_map(|h| {
            let n = h.vertex_count();
            (Just(h), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
        })
    ) {
        prop_assert_eq!(h.stats(), shuffled(&h, &perm).stats());
    }

    #[test]
    fn removal_is_monotone(h in hypergraph(8, 10, 1), pick in any::<prop::sample::Index>()) {
        prop_assume!(h.edge_count() > 1);
        let i = pick.index(h.edge_count());
        let (a, b) = (h.stats(), h.remove_hyperedge(i).unwrap().stats());
        prop_assert!(b.max_degree <= a.max_degree);
        prop_assert!(b.delta2 <= a.delta2);
        prop_assert!(b.rank <= a.rank);
        prop_assert!(b.antirank >= a.antirank);
    }

    #[test]
    fn line_graph_degree_is_edge_degree(h in hypergraph(8, 10, 1)) {
        let l = line_graph(&h);
        for i in 0..h.edge_count() {
            prop_assert_eq!(l.degree(i), h.hyperedge_degree(i).unwrap());
        }
    }

    #[test]
    fn two_section_degrees(h in hypergraph(8, 10, 1)) {
        let sec = two_section(&h);
        let deg = sec.degrees();
        for (x, &d) in deg.iter().enumerate() {
            let expect: usize = h.edges().iter().filter(|e| e.contains(&x)).map(|e| e.len() - 1).sum();
            prop_assert_eq!(d, expect);
        }
        prop_assert_eq!(sec.max_degree(), max_degree_two_section(&h));
        prop_assert_eq!(h.stats().delta2, sec.max_degree());
    }

    #[test]
    fn linear_graphs_are_their_own_two_section(h in linear(9)) {
        prop_assume!(h.uniformity() == Some(2));
        let sec = two_section(&h);
        let pairs: Vec<(usize, usize)> = sec.pairs().map(|(p, mult)| { assert_eq!(mult, 1); p }).collect();
        let mut edges: Vec<(usize, usize)> = h.edges().iter().map(|e| (e[0], e[1])).collect();
        edges.sort();
        prop_assert_eq!(pairs, edges);
    }
}

#[test]
fn duplicate_hyperedges_meet_each_other() {
    let h = Hypergraph::new(3, vec![vec![0, 1], vec![1, 0], vec![2]]).unwrap();
    assert_eq!(h.hyperedge_degrees(), vec![1, 1, 0]);
    assert_eq!(two_section(&h).multiplicity(0, 1), 2);
    assert!(!h.is_linear());
}
