use num_bigint::BigInt;
use proptest::prelude::*;
use sgdraw::format::{emit_drawing, emit_graph, parse_drawing_exact, parse_graph};
use sgdraw::graph::SignedGraphBuilder;
use sgdraw::grid::integerize;
use sgdraw::*;

fn build(n: usize, codes: &[u8]) -> SignedGraph {
    let mut b = SignedGraphBuilder::new(n);
    let mut it = codes.iter();
    for u in 0..n {
        for v in u + 1..n {
            match it.next().copied().unwrap_or(0) % 3 {
                1 => b.add(u, v, Sign::Positive).map(|_| ()).unwrap(),
                2 => b.add(u, v, Sign::Negative).map(|_| ()).unwrap(),
                _ => {}
            }
        }
    }
    b.build()
}

fn graph(max_n: usize) -> impl Strategy<Value = SignedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(0u8..3, n * (n - 1) / 2).prop_map(move |codes| build(n, &codes))
    })
}

fn graph_and_order(max_n: usize) -> impl Strategy<Value = (SignedGraph, Vec<usize>)> {
    graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..40, 1i64..7).prop_map(|(n, d)| q(n, d))
}

fn graph_and_drawing(max_n: usize) -> impl Strategy<Value = (SignedGraph, RationalDrawing)> {
    (graph(max_n), 1usize..=3).prop_flat_map(|(g, dim)| {
        let n = g.vertex_count();
        let pts = proptest::collection::vec(proptest::collection::vec(rational(), dim), n);
        (Just(g), pts.prop_map(move |p| Drawing::new(dim, p).unwrap()))
    })
}

fn passes(g: &SignedGraph, order: Vec<usize>) -> bool {
    let ctx = OrderContext::new(g, VertexOrdering::new(order).unwrap()).unwrap();
    conditions_check(&ctx).is_none()
}

fn valid<T: Scalar>(g: &SignedGraph, d: &Drawing<T>) -> bool {
    check_valid(g, d).unwrap().is_valid()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn validity_invariant_under_translation_and_scaling(
        (g, d) in graph_and_drawing(7),
        shift in proptest::collection::vec(rational(), 3),
        (sn, sd) in (1i64..9, 1i64..9),
    ) {
        let scale = q(sn, sd);
        let moved = Drawing::new(
            d.dim(),
            d.points()
                .iter()
                .map(|p| p.iter().zip(&shift).map(|(x, t)| (x + t) * &scale).collect())
                .collect(),
        )
        .unwrap();
        prop_assert_eq!(valid(&g, &d), valid(&g, &moved));
    }

    #[test]
    fn inclusion_chain(g in graph(7)) {
        if is_balanced(&g).is_some() {
            prop_assert!(is_clusterizable(&g).is_some());
        }
        if let Some(c) = is_clusterizable(&g) {
            prop_assert!(valid(&g, &cluster_drawing(&g, &c).unwrap()));
            prop_assert!(decide_line_bruteforce(&g, &OracleConfig::with_bound(8)).unwrap().is_drawable());
        }
    }

    #[test]
    fn conditions_symmetric_under_reversal((g, order) in graph_and_order(8)) {
        let mut rev = order.clone();
        rev.reverse();
        prop_assert_eq!(passes(&g, order), passes(&g, rev));
    }

    #[test]
    fn drawable_graphs_stay_drawable_after_deletion(g in graph(7)) {
        let cfg = OracleConfig::with_bound(8);
        if decide_line_bruteforce(&g, &cfg).unwrap().is_drawable() {
            for v in 0..g.vertex_count() {
                let h = g.without_vertex(v).unwrap();
                prop_assert!(decide_line_bruteforce(&h, &cfg).unwrap().is_drawable());
            }
        }
    }

    #[test]
    fn graph_text_round_trip(g in graph(9)) {
        prop_assert_eq!(parse_graph(&emit_graph(&g)).unwrap(), g);
    }

    #[test]
    fn drawing_text_round_trip((_, d) in graph_and_drawing(6)) {
        prop_assert_eq!(parse_drawing_exact(&emit_drawing(&d)).unwrap(), d);
    }

    #[test]
    fn integerize_preserves_order_and_validity((g, d) in graph_and_drawing(6)) {
        let i = integerize(&d);
        for c in 0..d.dim() {
            for u in 0..d.len() {
                for v in 0..d.len() {
                    prop_assert_eq!(d.point(u)[c].cmp(&d.point(v)[c]), i.point(u)[c].cmp(&i.point(v)[c]));
                }
            }
        }
        prop_assert!(i.points().iter().flatten().all(|x| *x >= BigInt::from(0)));
        prop_assert_eq!(valid(&g, &d), valid(&g, &i));
    }
}
