use std::collections::BTreeSet;
use std::ops::ControlFlow;

use proptest::prelude::*;
use robust_chromatic::factors::{enumerate_perfect_matchings, two_factor_complement};
use robust_chromatic::graph::{chromatic_number, graph6, is_bipartite, EdgeId, Graph};
use robust_chromatic::planar::format::{emit_embedding, parse_embedding};
use robust_chromatic::planar::{check_planarity, dual, is_triangulation, solids, trace_faces, Embedding};
use robust_chromatic::selection::{build_assignment, check_assignment, is_minimal, is_selection_set, minimalize};
use robust_chromatic::solver::{chi1, chi1_bruteforce, degeneracy_bound, Status};
use robust_chromatic::Budget;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[k] {
                edges.push((u, v));
            }
            k += 1;
        }
    }
    Graph::new(n, edges).unwrap()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, prop::collection::vec(prop::bool::weighted(0.45), max_n * (max_n - 1) / 2))
        .prop_map(|(n, bits)| graph_from_bits(n, &bits))
}

/// A graph with an edge subset drawn by mask.
fn arb_graph_and_subset(max_n: usize) -> impl Strategy<Value = (Graph, BTreeSet<EdgeId>)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), prop::collection::vec(any::<bool>(), m))
            .prop_map(|(g, mask)| (g, mask.iter().enumerate().filter(|(_, &b)| b).map(|(e, _)| e).collect()))
    })
}

fn arb_stacked() -> impl Strategy<Value = Embedding> {
    prop::collection::vec(0usize..64, 0..10).prop_map(|c| solids::stacked(&c))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 128, ..ProptestConfig::default() })]

    #[test]
    fn graph6_round_trip(g in arb_graph(24)) {
        let text = graph6::emit_graph6(&g);
        prop_assert_eq!(graph6::parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn selection_iff_assignment((g, s) in arb_graph_and_subset(9)) {
        let sel = is_selection_set(&g, &s);
        let built = build_assignment(&g, &s);
        prop_assert_eq!(sel, built.is_ok());
        if let Ok(a) = built {
            prop_assert!(check_assignment(&g, &a, &s).is_ok());
            prop_assert!(s.len() <= g.vertex_count());
        }
    }

    #[test]
    fn selection_sets_are_closed_under_subsets((g, s) in arb_graph_and_subset(9), drop in any::<prop::sample::Index>()) {
        prop_assume!(is_selection_set(&g, &s) && !s.is_empty());
        let e = *s.iter().nth(drop.index(s.len())).unwrap();
        let mut t = s.clone();
        t.remove(&e);
        prop_assert!(is_selection_set(&g, &t));
    }

    #[test]
    fn minimalize_returns_a_minimal_subset((g, s) in arb_graph_and_subset(8)) {
        prop_assume!(is_selection_set(&g, &s));
        let rest_bipartite = is_bipartite(&g.without_edges(&s)).is_bipartite();
        match minimalize(&g, &s) {
            Ok(min) => {
                prop_assert!(rest_bipartite);
                prop_assert!(min.is_subset(&s));
                prop_assert!(is_minimal(&g, &min));
                prop_assert_eq!(minimalize(&g, &min).unwrap(), min);
            }
            Err(_) => prop_assert!(!rest_bipartite),
        }
    }

    #[test]
    fn chi1_bounds_and_oracle(g in arb_graph(8)) {
        let r = chi1(&g, None, &Budget::unlimited());
        prop_assert_eq!(r.status, Status::Exact);
        let v = r.lower;
        let chi = chromatic_number(&g, &Budget::unlimited()).exact().unwrap();
        prop_assert!(chi.div_ceil(3) <= v && v <= chi);
        prop_assert!(v <= degeneracy_bound(&g));
        prop_assert_eq!(Some(v), chi1_bruteforce(&g).unwrap().value());
        let w = r.witness.expect("exact answers carry a witness");
        prop_assert!(w.verify(&g).is_ok());
        prop_assert_eq!(w.colors_used().max(1), v.max(1));
    }

    #[test]
    fn chi1_is_deterministic(g in arb_graph(8), limit in 1u64..200) {
        let a = chi1(&g, None, &Budget::limited(limit)).to_json();
        let b = chi1(&g, None, &Budget::limited(limit)).to_json();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn stacked_triangulation_duals(emb in arb_stacked()) {
        let n = emb.graph().vertex_count();
        prop_assert!(is_triangulation(&emb));
        prop_assert_eq!(trace_faces(&emb).len(), 2 * n - 4);
        let d = dual(&emb).unwrap();
        let star = d.embedding().unwrap();
        prop_assert!(star.graph().is_regular(3));
        prop_assert!(check_planarity(star).is_planar());
        let back = dual(star).unwrap();
        let bg = back.graph().unwrap();
        prop_assert_eq!(bg.vertex_count(), n);
        prop_assert_eq!(bg.edge_count(), emb.graph().edge_count());
        for e in 0..emb.graph().edge_count() {
            prop_assert_eq!(d.primal_edge(d.dual_edge(e)), e);
        }
    }

    #[test]
    fn embedding_text_round_trip(emb in arb_stacked()) {
        let text = emit_embedding(&emb);
        let back = parse_embedding(&text).unwrap();
        prop_assert_eq!(emit_embedding(&back), text);
        prop_assert_eq!(back, emb);
    }

    #[test]
    fn matchings_leave_two_factors(emb in arb_stacked()) {
        let d = dual(&emb).unwrap();
        let cubic = d.graph().unwrap().clone();
        let mut checked = 0;
        enumerate_perfect_matchings(&cubic, Some(20), |m| {
            let f = two_factor_complement(&cubic, m).unwrap();
            assert_eq!(f.edges().len(), cubic.vertex_count());
            assert_eq!(f.cycle_lengths().iter().sum::<usize>(), cubic.vertex_count());
            checked += 1;
            ControlFlow::Continue(())
        });
        prop_assert!(checked >= 1);
    }
}
