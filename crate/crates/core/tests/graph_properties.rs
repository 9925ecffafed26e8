use mct_core::graph::io::{parse_certificate, parse_colored, parse_graph, write_certificate, write_colored, write_graph};
use mct_core::graph::{
    blowup, canonical_form, enumerate_copies, hom_exists, quotient_by_partition, EdgeColoredGraph,
    Packing, Partition, SimpleGraph,
};
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = SimpleGraph::empty(n);
            let mut i = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[i] {
                        g.add_edge(u, v).unwrap();
                    }
                    i += 1;
                }
            }
            g
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #[test]
    fn blowup_multiplies_edges(g in arb_graph(7), t in 1usize..4) {
        let b = blowup(&g, t).unwrap();
        prop_assert_eq!(b.n(), g.n() * t);
        prop_assert_eq!(b.edge_count(), g.edge_count() * t * t);
        // collapsing the clone classes gives back the original graph
        let classes: Vec<Vec<usize>> = (0..g.n()).map(|v| (0..t).map(|i| v * t + i).collect()).collect();
        let q = quotient_by_partition(&b, &Partition::new(b.n(), classes).unwrap()).unwrap();
        prop_assert_eq!(q, g);
    }

    #[test]
    fn quotient_receives_a_homomorphism(
        (g, labels) in arb_graph(7).prop_flat_map(|g| {
            let n = g.n();
            (Just(g), proptest::collection::vec(0usize..4, n))
        })
    ) {
        let p = Partition::from_labels(&labels);
        match quotient_by_partition(&g, &p) {
            Ok(q) => {
                prop_assert!(hom_exists(&g, &q));
                for e in g.edges() {
                    let l = p.labels();
                    prop_assert!(q.has_edge(l[e.0], l[e.1]));
                }
            }
            Err(_) => {
                prop_assert!(p.classes().iter().any(|c| !g.is_independent(c)));
            }
        }
    }

    #[test]
    fn canonical_form_ignores_relabeling(
        (g, perm) in arb_graph(8).prop_flat_map(|g| { let n = g.n(); (Just(g), arb_perm(n)) })
    ) {
        let h = g.relabel(&perm).unwrap();
        prop_assert_eq!(canonical_form(&g, None), canonical_form(&h, None));
    }

    #[test]
    fn canonical_form_separates_edge_counts(a in arb_graph(6), b in arb_graph(6)) {
        if a.n() != b.n() || a.edge_count() != b.edge_count() {
            prop_assert_ne!(canonical_form(&a, None), canonical_form(&b, None));
        }
    }

    #[test]
    fn text_round_trip(g in arb_graph(9), shift in 0usize..5) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g.clone());
        let colored = EdgeColoredGraph::from_colored_edges(
            g.n(),
            g.edges().into_iter().enumerate().map(|(i, e)| (e.0, e.1, (i + shift) % 3)),
        )
        .unwrap();
        prop_assert_eq!(parse_colored(&write_colored(&colored)).unwrap(), colored);
    }
}

#[test]
fn cycle_has_one_copy_in_itself() {
    for k in 3..=9 {
        let c = SimpleGraph::cycle(k);
        assert_eq!(enumerate_copies(&c, &c, usize::MAX).unwrap().len(), 1, "C_{k}");
    }
}

#[test]
fn copy_counts_match_closed_forms() {
    // triangles in K_n: C(n,3); 4-cycles in K_n: 3·C(n,4)
    for n in 3..=8 {
        let kn = SimpleGraph::complete(n);
        let c3 = enumerate_copies(&kn, &SimpleGraph::cycle(3), usize::MAX).unwrap().len();
        assert_eq!(c3, n * (n - 1) * (n - 2) / 6);
        let c4 = enumerate_copies(&kn, &SimpleGraph::cycle(4), usize::MAX).unwrap().len();
        assert_eq!(c4, 3 * n * (n - 1) * (n - 2) * (n - 3) / 24);
    }
}

#[test]
fn certificate_round_trip() {
    let d = mct_core::constructions::cycle_blowup_decomposition(5, 3).unwrap();
    let p: Packing = d.to_packing();
    let back = parse_certificate(&write_certificate(&p)).unwrap();
    assert_eq!(back, p);
}
