use proptest::prelude::*;

use movdom::domination::greedy_dominating_set;
use movdom::edgelist;
use movdom::movable::{verify_certificate, Verdict};
use movdom::products::{corona, join, slice_copy};
use movdom::{gamma, gamma_m2, is_2movable_dominating, is_dominating, Graph, ReplacementMode, VertexSet};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        proptest::collection::vec(any::<bool>(), pairs.len()).prop_map(move |keep| {
            let edges: Vec<_> = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&p, _)| p).collect();
            Graph::from_edge_list(n, &edges).unwrap()
        })
    })
}

fn subset_of(g: &Graph) -> impl Strategy<Value = VertexSet> {
    let n = g.order();
    (0..1u64 << n).prop_map(VertexSet::from_bits)
}

fn graph_and_sets(max_n: usize) -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    graph(max_n).prop_flat_map(|g| {
        let s = subset_of(&g);
        let t = subset_of(&g);
        (Just(g), s, t)
    })
}

proptest! {
    #[test]
    fn constructed_graphs_are_simple(g in graph(12)) {
        for v in 0..g.order() {
            prop_assert!(!g.neighbors(v).contains(v));
            for u in g.neighbors(v) {
                prop_assert!(u < g.order());
                prop_assert!(g.has_edge(u, v));
            }
        }
    }

    #[test]
    fn closed_neighborhood_is_monotone((g, s, t) in graph_and_sets(10)) {
        let small = s.intersection(t);
        let ns = g.closed_neighborhood(small).unwrap();
        let nt = g.closed_neighborhood(t).unwrap();
        prop_assert!(ns.is_subset(nt));
        prop_assert_eq!(g.closed_neighborhood(g.vertices()).unwrap(), g.vertices());
    }

    #[test]
    fn domination_is_closed_under_supersets((g, s, t) in graph_and_sets(10)) {
        if is_dominating(&g, s) {
            prop_assert!(is_dominating(&g, s.union(t)));
        }
    }

    #[test]
    fn greedy_never_beats_exact(g in graph(10)) {
        let exact = gamma(&g).unwrap().value().unwrap();
        prop_assert!(exact <= greedy_dominating_set(&g).len());
    }

    #[test]
    fn gamma_m2_floor_and_mode_order(g in graph(7)) {
        let literal = gamma_m2(&g, ReplacementMode::Literal).unwrap();
        let distinct = gamma_m2(&g, ReplacementMode::Distinct).unwrap();
        if let Some(v) = literal.value() {
            prop_assert!(v >= 2);
        }
        if let Some(d) = distinct.value() {
            prop_assert!(d >= 2);
            prop_assert!(literal.value().unwrap() <= d);
        }
        for (mode, r) in [(ReplacementMode::Literal, &literal), (ReplacementMode::Distinct, &distinct)] {
            if let (Some(w), Some(c)) = (r.witness(), r.certificate()) {
                prop_assert_eq!(verify_certificate(&g, w, c, mode), Ok(true));
            }
        }
    }

    #[test]
    fn distinct_certificates_also_certify_literally((g, s, _t) in graph_and_sets(8)) {
        prop_assume!(!s.is_empty());
        if let Verdict::Certified(cert) = is_2movable_dominating(&g, s, ReplacementMode::Distinct).unwrap() {
            prop_assert_eq!(verify_certificate(&g, s, &cert, ReplacementMode::Literal), Ok(true));
            prop_assert!(is_2movable_dominating(&g, s, ReplacementMode::Literal).unwrap().is_certified());
        }
    }

    #[test]
    fn emitted_certificates_verify((g, s, _t) in graph_and_sets(8), distinct in any::<bool>()) {
        prop_assume!(!s.is_empty());
        let mode = if distinct { ReplacementMode::Distinct } else { ReplacementMode::Literal };
        if let Verdict::Certified(cert) = is_2movable_dominating(&g, s, mode).unwrap() {
            prop_assert_eq!(verify_certificate(&g, s, &cert, mode), Ok(true));
        }
        if let Verdict::Certified(cert) = movdom::is_1movable_dominating(&g, s).unwrap() {
            prop_assert_eq!(verify_certificate(&g, s, &cert, mode), Ok(true));
        }
    }

    #[test]
    fn edge_list_round_trip(g in graph(20)) {
        let text = edgelist::write(&g, &["generated".to_string()]);
        prop_assert_eq!(edgelist::parse(&text).unwrap(), g);
    }

    #[test]
    fn join_degrees(g in graph(6), h in graph(6)) {
        let (p, layout) = join(&g, &h).unwrap();
        prop_assert_eq!(p.size(), g.size() + h.size() + g.order() * h.order());
        for v in layout.left.clone() {
            prop_assert_eq!(p.degree(v), g.degree(v) + h.order());
        }
        for v in layout.right.clone() {
            prop_assert_eq!(p.degree(v), h.degree(v - g.order()) + g.order());
        }
    }

    #[test]
    fn corona_degrees_and_cover(g in graph(5), h in graph(5)) {
        let (p, layout) = corona(&g, &h).unwrap();
        prop_assert_eq!(p.order(), g.order() * (1 + h.order()));
        let mut owned = vec![0usize; p.order()];
        for (a, &c) in layout.centers.iter().enumerate() {
            owned[c] += 1;
            prop_assert_eq!(p.degree(c), g.degree(a) + h.order());
            prop_assert_eq!(layout.copies[a].len(), h.order());
            for v in layout.copies[a].clone() {
                owned[v] += 1;
                prop_assert_eq!(p.degree(v), h.degree(v - layout.copies[a].start) + 1);
            }
            prop_assert_eq!(&slice_copy(&layout, a, &p).unwrap().graph, &h);
        }
        prop_assert!(owned.iter().all(|&k| k == 1));
        prop_assert_eq!(p.is_connected(), g.is_connected());
    }

    #[test]
    fn apex_corona_equals_apex_join(h in graph(8)) {
        let k1 = Graph::empty(1).unwrap();
        // Both layouts put the apex at 0 and H at 1..; the relabeling is the identity.
        prop_assert_eq!(corona(&k1, &h).unwrap().0, join(&k1, &h).unwrap().0);
    }
}
