use proptest::prelude::*;

use dpd_core::corpus;
use dpd_core::cover::{normalize_cover, verify_transversal, Cover, SpanningTree};
use dpd_core::discharge::{apply_rules, initial_charges, ratio, RuleSet};
use dpd_core::dp::dp_k_colorability_chunked;
use dpd_core::io::{format_cover, parse_cover, GraphDocument};
use dpd_core::plane::PlaneGraph;
use dpd_core::solver::{find_m_coloring, greedy_m_coloring};
use dpd_core::structure::degeneracy_ordering;

fn plane_graph() -> impl Strategy<Value = PlaneGraph> {
    prop_oneof![
        (4usize..14, 0usize..12, any::<u64>()).prop_map(|(n, d, s)| corpus::random_planar(n, d, s)),
        (4usize..8, 1usize..4, any::<u64>())
            .prop_map(|(n, p, s)| corpus::subdivided_planar(n, p, s)),
        (5usize..9, 1usize..4, any::<u64>())
            .prop_map(|(n, t, s)| corpus::sparse_triangles(n, t, s)),
        (1usize..4, 1usize..4).prop_map(|(r, c)| corpus::hex_patch(r, c)),
    ]
}

fn small_graph() -> impl Strategy<Value = PlaneGraph> {
    (4usize..8, 2usize..10, any::<u64>()).prop_map(|(n, d, s)| corpus::random_planar(n, d, s))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn darts_lie_on_exactly_one_face(g in plane_graph()) {
        let total: usize = g.faces().iter().map(|f| f.len()).sum();
        prop_assert_eq!(total, 2 * g.edge_count());
        for &(u, v) in g.graph().edges() {
            prop_assert!(g.face_of_dart(u, v).is_some());
            prop_assert!(g.face_of_dart(v, u).is_some());
        }
        prop_assert_eq!(g.vertex_count() as i64 - g.edge_count() as i64 + g.face_count() as i64, 2);
    }

    #[test]
    fn charges_sum_to_minus_twelve(g in plane_graph()) {
        prop_assert_eq!(initial_charges(&g).unwrap().initial_total(), ratio(-12, 1));
        for rs in RuleSet::ALL {
            let out = apply_rules(&g, rs).unwrap();
            prop_assert_eq!(out.ledger.total(), ratio(-12, 1));
            prop_assert!(out.ledger.transfers().iter().all(|t| t.amount > ratio(0, 1)));
        }
    }

    #[test]
    fn rule_application_is_deterministic(g in plane_graph()) {
        let a = apply_rules(&g, RuleSet::A).unwrap();
        let b = apply_rules(&g, RuleSet::A).unwrap();
        prop_assert_eq!(a.ledger.transfers(), b.ledger.transfers());
        prop_assert_eq!(a.flags, b.flags);
    }

    #[test]
    fn documents_round_trip(g in plane_graph()) {
        let text = GraphDocument::from_plane_graph(None, &g).format();
        let back = GraphDocument::parse(&text).unwrap();
        prop_assert_eq!(back.format(), text);
        let rebuilt = back.to_plane_graph().unwrap();
        prop_assert_eq!(rebuilt.faces(), g.faces());
    }

    #[test]
    fn degeneracy_order_colours_greedily(g in plane_graph(), seed in any::<u64>()) {
        let cert = degeneracy_ordering(g.graph());
        prop_assert!(cert.verify(g.graph()));
        let c = Cover::random_permutation(g.graph(), cert.degeneracy + 1, seed).unwrap();
        let t = greedy_m_coloring(&c, &cert.coloring_order());
        prop_assert!(t.is_some_and(|t| verify_transversal(&c, &t)));
    }

    #[test]
    fn covers_round_trip(g in small_graph(), k in 1usize..4, seed in any::<u64>()) {
        let c = Cover::random_permutation(g.graph(), k, seed).unwrap();
        let back = parse_cover(&format_cover(&c), g.graph()).unwrap();
        prop_assert_eq!(back.matchings(), c.matchings());
    }

    #[test]
    fn normalization_preserves_colourability(g in small_graph(), k in 2usize..4, seed in any::<u64>()) {
        let c = Cover::random_permutation(g.graph(), k, seed).unwrap();
        let tree = SpanningTree::bfs(g.graph()).unwrap();
        let n = normalize_cover(&c, &tree).unwrap();
        let original = find_m_coloring(&c);
        let normalized = find_m_coloring(&n.cover);
        prop_assert_eq!(original.is_found(), normalized.is_found());
        if let Some(t) = original.transversal {
            prop_assert!(verify_transversal(&n.cover, &n.map_transversal(&t)));
        }
    }

    #[test]
    fn enumeration_ignores_chunking(g in small_graph(), chunks in 1usize..9) {
        let one = dp_k_colorability_chunked(g.graph(), 2, u64::MAX, 1).unwrap();
        let many = dp_k_colorability_chunked(g.graph(), 2, u64::MAX, chunks).unwrap();
        prop_assert_eq!(one, many);
    }
}
