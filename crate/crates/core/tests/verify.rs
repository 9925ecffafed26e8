use std::collections::BTreeSet;
use std::ops::ControlFlow;

use mct_core::constructions::{c4_lower_bound_instance, cycle_blowup_decomposition};
use mct_core::graph::{enumerate_embeddings, EdgeColoredGraph, SimpleGraph};
use mct_core::verify::{
    classify_pair, contains_rainbow_copy, lemma53_check, pair_census, pattern_type,
    rainbow_cherry_count, verify_packing, PairSize, PatternKind,
};
use proptest::prelude::*;

fn colored(n: usize, classes: &[&[usize]]) -> EdgeColoredGraph {
    let mut triples = Vec::new();
    for (c, cyc) in classes.iter().enumerate() {
        for i in 0..cyc.len() {
            triples.push((cyc[i], cyc[(i + 1) % cyc.len()], c));
        }
    }
    EdgeColoredGraph::from_colored_edges(n, triples).unwrap()
}

/// Least image tuple over all embeddings whose edges carry distinct colors.
fn least_rainbow_embedding(h: &EdgeColoredGraph, g: &SimpleGraph) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    enumerate_embeddings(h.graph(), g, |_, _, _| true, |images| {
        let colors: BTreeSet<_> = g.edges().iter().map(|e| h.color(images[e.0], images[e.1]).unwrap()).collect();
        if colors.len() == g.edge_count() && best.as_deref().is_none_or(|b| images < b) {
            best = Some(images.to_vec());
        }
        ControlFlow::Continue(())
    });
    best
}

fn arb_colored(max_n: usize, colors: usize) -> impl Strategy<Value = EdgeColoredGraph> {
    (3..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::option::weighted(0.6, 0..colors), n * (n - 1) / 2).prop_map(
            move |cells| {
                let mut triples = Vec::new();
                let mut i = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if let Some(c) = cells[i] {
                            triples.push((u, v, c));
                        }
                        i += 1;
                    }
                }
                EdgeColoredGraph::from_colored_edges(n, triples).unwrap()
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]
    #[test]
    fn rainbow_search_matches_enumeration(h in arb_colored(8, 4), which in 0usize..4) {
        let g = match which {
            0 => SimpleGraph::cycle(3),
            1 => SimpleGraph::cycle(4),
            2 => SimpleGraph::path(4),
            _ => SimpleGraph::complete(4),
        };
        let found = contains_rainbow_copy(&h, &g).unwrap().map(|e| e.images);
        prop_assert_eq!(found, least_rainbow_embedding(&h, &g));
    }
}

/// Type 1: black u-x1-y1-x2, red v-x1-y2-x3, green u-x3-x2-v with
/// u = 0, v = 1, x1..x3 = 2..4, y1, y2 = 5, 6.
fn type1_instance() -> EdgeColoredGraph {
    colored(7, &[&[0, 2, 5, 3], &[1, 2, 6, 4], &[0, 4, 3, 1]])
}

/// Type 2 with 5-cycles: red x2-u-w-v-x1, green x3-u-w'-v-x2,
/// black x1-u-w''-v-x3.
fn type2_instance() -> EdgeColoredGraph {
    colored(8, &[&[3, 0, 5, 1, 2], &[4, 0, 6, 1, 3], &[2, 0, 7, 1, 4]])
}

#[test]
fn type1_configuration() {
    let h = type1_instance();
    assert!(verify_packing(&h, &SimpleGraph::cycle(4)).ok);
    assert!(contains_rainbow_copy(&h, &SimpleGraph::cycle(4)).unwrap().is_none());
    let c = classify_pair(&h, 0, 1).unwrap();
    assert_eq!(c.rainbow_common_neighbors, vec![2, 3, 4]);
    assert_eq!(c.size, PairSize::Large);
    assert_eq!(pattern_type(&h, 0, 1).unwrap().kind, PatternKind::Type1);
    assert_eq!(classify_pair(&h, 2, 3).unwrap().size, PairSize::Small);
    assert_eq!(classify_pair(&h, 2, 4).unwrap().size, PairSize::Small);
    let sweep = lemma53_check(&h, 4).unwrap();
    assert!(sweep.preconditions);
    assert!(sweep.violations.is_empty(), "{:?}", sweep.violations);
    assert!(sweep.type1 >= 1);
    assert!(pair_census(&h).all_ok());
}

#[test]
fn type2_configuration() {
    let h = type2_instance();
    assert!(verify_packing(&h, &SimpleGraph::cycle(5)).ok);
    assert!(contains_rainbow_copy(&h, &SimpleGraph::cycle(4)).unwrap().is_none());
    assert_eq!(pattern_type(&h, 0, 1).unwrap().kind, PatternKind::Type2);
    let sweep = lemma53_check(&h, 5).unwrap();
    assert!(sweep.preconditions);
    assert!(!sweep.is_counterexample(), "{:?}", sweep.violations);
    assert!(sweep.type2 >= 1);
    assert!(classify_pair(&h, 2, 2).is_err());
    assert!(pattern_type(&h, 5, 6).is_err());
}

#[test]
fn polarity_instances_pass_the_counting_chain() {
    for q in [2, 3] {
        let inst = c4_lower_bound_instance(q).unwrap();
        let h = &inst.colored;
        let census = pair_census(h);
        assert!(census.all_ok(), "q = {q}: {:?}", census.violations);
        let n = h.n();
        assert_eq!(census.small + census.medium + census.large, (n * (n - 1) / 2) as u64);
        assert!(2 * census.large <= census.small);
        let direct = rainbow_cherry_count(h).unwrap();
        let by_degree: u64 = (0..n)
            .map(|v| {
                let m = h.graph().degree(v) as u64 / 2;
                m * m.saturating_sub(1) / 2
            })
            .sum();
        assert_eq!(direct, 4 * by_degree);
        assert_eq!(census.cherries, direct);
        let sweep = lemma53_check(h, 4).unwrap();
        assert!(sweep.preconditions && sweep.violations.is_empty());
    }
}

#[test]
fn packing_mutation_is_located() {
    let d = cycle_blowup_decomposition(5, 2).unwrap();
    let mut h = d.to_colored().unwrap();
    assert!(verify_packing(&h, &SimpleGraph::cycle(5)).ok);
    let e = h.graph().edges()[0];
    let other = (h.color(e.0, e.1).unwrap() + 1) % 4;
    h.recolor(e, other).unwrap();
    let report = verify_packing(&h, &SimpleGraph::cycle(5));
    assert!(!report.ok);
    assert!(report.offender.is_some());
}
