mod common;

use listcol::graph::{generate, labeled_graphs, parse_graph, serialize_graph, Family};
use listcol::Graph;
use proptest::prelude::*;

fn check_invariants(g: &Graph) {
    for &(u, v) in g.edges() {
        assert!(u < v, "edge ({u},{v}) not normalized");
        assert!(g.contains(u) && g.contains(v));
        assert!(g.neighbors(u).contains(&v) && g.neighbors(v).contains(&u));
    }
    assert!(g.edges().windows(2).all(|w| w[0] < w[1]));
    let degree_sum: usize = g.vertices().map(|v| g.degree(v)).sum();
    assert_eq!(degree_sum, 2 * g.edge_count());
    for v in g.vertices() {
        assert!(!g.neighbors(v).contains(&v));
        assert!(g.neighbors(v).windows(2).all(|w| w[0] < w[1]));
    }
}

#[test]
fn generated_graphs_are_simple() {
    for n in 1..=7 {
        for f in Family::ALL {
            let params: Vec<usize> = if f.arity() == 2 { vec![n, 8 - n] } else { vec![n] };
            if let Ok(g) = generate(f, &params) {
                check_invariants(&g);
            }
        }
    }
    for g in labeled_graphs(5) {
        check_invariants(&g);
    }
}

#[test]
fn labeled_graphs_match_oracle() {
    for n in 0..=5 {
        assert_eq!(labeled_graphs(n).collect::<Vec<_>>(), common::all_graphs(n));
    }
}

#[test]
fn parity_oracle_agrees_with_brute_force() {
    for n in 0..=6 {
        for g in common::all_graphs(n) {
            assert_eq!(common::parity_bipartite(&g), common::brute_bipartite(&g));
        }
    }
}

#[test]
fn pendant_preserves_bipartiteness() {
    for n in 1..=6 {
        for g in common::all_graphs(n).into_iter().filter(common::brute_bipartite) {
            for v in g.vertices() {
                let (h, w) = g.add_pendant(v).unwrap();
                assert_eq!(w, n + 1);
                assert!(common::brute_bipartite(&h), "{g:?} + pendant at {v}");
            }
        }
    }
}

proptest! {
    #[test]
    fn serialize_round_trips(n in 0usize..=20, mask in proptest::collection::vec(any::<bool>(), 190)) {
        let mut edges = Vec::new();
        let mut bit = 0;
        for u in 1..=n {
            for v in u + 1..=n {
                if mask[bit] { edges.push((u, v)); }
                bit += 1;
            }
        }
        let g = Graph::from_edge_list(n, &edges).unwrap();
        let text = serialize_graph(&g);
        prop_assert_eq!(parse_graph(&text).unwrap(), g.clone());
        prop_assert_eq!(serialize_graph(&parse_graph(&text).unwrap()), text);
    }

    #[test]
    fn add_pendant_grows_by_one(n in 1usize..=12, p in 0.0f64..1.0, seed in any::<u64>(), pick in any::<usize>()) {
        let g = listcol::graph::random_gnp(n, p, seed);
        let v = pick % n + 1;
        let (h, w) = g.add_pendant(v).unwrap();
        prop_assert_eq!(h.vertex_count(), n + 1);
        prop_assert_eq!(h.edge_count(), g.edge_count() + 1);
        prop_assert_eq!(h.neighbors(w), &[v][..]);
        for &e in g.edges() {
            prop_assert!(h.has_edge(e.0, e.1));
        }
        check_invariants(&h);
    }
}
