//! The optimized predicates and solvers against the brute-force reference.

mod common;

use common::reference::{brute_connected_count, Naive};
use movdom::generate::{enumerate_connected_graphs, random_connected_graph};
use movdom::subsets::k_subsets;
use movdom::{
    gamma, gamma_m1, gamma_m2, is_1movable_dominating, is_2movable_dominating, is_dominating, make_family,
    ReplacementMode, VertexSet,
};

#[test]
fn enumeration_counts_match_brute_force() {
    for n in 1..=5 {
        assert_eq!(enumerate_connected_graphs(n).unwrap().count(), brute_connected_count(n), "n = {n}");
    }
    assert_eq!(brute_connected_count(4), 38);
    assert_eq!(brute_connected_count(5), 728);
}

#[test]
fn predicates_agree_on_every_subset() {
    for n in 1..=5 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let naive = Naive::new(&g);
            for mask in 1..1u64 << n {
                let s = VertexSet::from_bits(mask);
                let m = Naive::members(mask, n);
                assert_eq!(is_dominating(&g, s), naive.dominating(&m), "{g:?} {s}");
                assert_eq!(is_1movable_dominating(&g, s).unwrap().is_certified(), naive.one_movable(&m), "{g:?} {s}");
                for (mode, distinct) in [(ReplacementMode::Literal, false), (ReplacementMode::Distinct, true)] {
                    assert_eq!(
                        is_2movable_dominating(&g, s, mode).unwrap().is_certified(),
                        naive.two_movable(&m, distinct),
                        "{g:?} {s} {mode}"
                    );
                }
            }
        }
    }
}

#[test]
fn solvers_agree_on_all_small_connected_graphs() {
    for n in 1..=5 {
        for g in enumerate_connected_graphs(n).unwrap() {
            let naive = Naive::new(&g);
            assert_eq!(gamma(&g).unwrap().value(), naive.gamma());
            assert_eq!(gamma_m1(&g).unwrap().value(), naive.gamma_m1());
            assert_eq!(gamma_m2(&g, ReplacementMode::Literal).unwrap().value(), naive.gamma_m2(false));
            assert_eq!(gamma_m2(&g, ReplacementMode::Distinct).unwrap().value(), naive.gamma_m2(true));
        }
    }
}

#[test]
fn gamma_witness_is_minimal_up_to_eight_vertices() {
    for seed in 0..40 {
        let n = 3 + (seed as usize % 6);
        let g = random_connected_graph(n, 0.35, seed).unwrap();
        let r = gamma(&g).unwrap();
        let (value, witness) = (r.value().unwrap(), r.witness().unwrap());
        assert_eq!(witness.len(), value);
        assert!(is_dominating(&g, witness));
        assert!(k_subsets(n, value - 1).all(|s| !is_dominating(&g, s)), "{g:?}");
        // Least bitmask among the optimal sets.
        let least =
            (0..1u64 << n).map(VertexSet::from_bits).filter(|s| s.len() == value && is_dominating(&g, *s)).min();
        assert_eq!(Some(witness), least);
    }
}

/// family, gamma, gamma_m1, gamma_m2 literal, gamma_m2 distinct.
type Frozen = (&'static str, Option<usize>, Option<usize>, Option<usize>, Option<usize>);

#[test]
fn frozen_values_from_the_reference() {
    // Computed once with `Naive` and frozen here.
    let cases: &[Frozen] = &[
        ("path:4", Some(2), Some(2), Some(2), Some(2)),
        ("star:4", Some(1), Some(3), Some(3), None),
        ("complete:4", Some(1), Some(1), Some(2), Some(2)),
        ("complete:1", Some(1), None, None, None),
        ("cycle:4", Some(2), Some(2), Some(2), Some(2)),
        ("star:5", Some(1), Some(4), Some(4), None),
    ];
    for &(family, g0, g1, g2l, g2d) in cases {
        let g = make_family(family).unwrap();
        let naive = Naive::new(&g);
        assert_eq!(
            (naive.gamma(), naive.gamma_m1(), naive.gamma_m2(false), naive.gamma_m2(true)),
            (g0, g1, g2l, g2d),
            "{family}"
        );
        assert_eq!(gamma(&g).unwrap().value(), g0, "{family}");
        assert_eq!(gamma_m1(&g).unwrap().value(), g1, "{family}");
        assert_eq!(gamma_m2(&g, ReplacementMode::Literal).unwrap().value(), g2l, "{family}");
        assert_eq!(gamma_m2(&g, ReplacementMode::Distinct).unwrap().value(), g2d, "{family}");
    }
}
