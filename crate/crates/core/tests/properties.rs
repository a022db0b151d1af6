mod common;

use proptest::prelude::*;
use zdg_daml::expr::{parse, unparse, FamilyExpr};
use zdg_daml::labeling::{weight_profile, Labeling};
use zdg_daml::ops::{cartesian_product, complement, copies, join};
use zdg_daml::search::decide_small;
use zdg_daml::Graph;

fn graph_upto(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges((0..n).map(|i| format!("v{i}")), edges).unwrap()
        })
    })
}

fn labeled_graph(max_order: usize) -> impl Strategy<Value = (Graph, Vec<u32>)> {
    graph_upto(max_order).prop_flat_map(|g| {
        let labels: Vec<u32> = (1..=g.order() as u32).collect();
        (Just(g), Just(labels).prop_shuffle())
    })
}

fn expr_tree() -> impl Strategy<Value = FamilyExpr> {
    let leaf = (2u64..1_000_000).prop_map(FamilyExpr::Zn);
    leaf.prop_recursive(6, 64, 4, |inner| {
        prop_oneof![
            (1u64..30, inner.clone()).prop_map(|(k, e)| FamilyExpr::Copies(k, Box::new(e))),
            prop::collection::vec(inner.clone(), 2..4).prop_map(FamilyExpr::Join),
            (inner.clone(), inner.clone())
                .prop_map(|(l, r)| FamilyExpr::Product(Box::new(l), Box::new(r))),
            inner.prop_map(|e| FamilyExpr::Complement(Box::new(e))),
        ]
    })
}

proptest! {
    #[test]
    fn weight_sum_is_degree_weighted_label_sum((g, labels) in labeled_graph(14)) {
        let p = weight_profile(&g, &Labeling::new(labels.clone())).unwrap();
        let lhs: i64 = p.weights.iter().sum();
        let rhs: i64 = (0..g.order()).map(|v| g.degree(v) as i64 * labels[v] as i64).sum();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(p.weights, common::naive_weights(&g, &labels));
    }

    #[test]
    fn product_degrees_add(g in graph_upto(7), h in graph_upto(7)) {
        let p = cartesian_product(&g, &h).unwrap();
        prop_assert_eq!(p.order(), g.order() * h.order());
        prop_assert_eq!(p.size(), g.order() * h.size() + h.order() * g.size());
        for u in 0..g.order() {
            for v in 0..h.order() {
                prop_assert_eq!(p.degree(u * h.order() + v), g.degree(u) + h.degree(v));
            }
        }
    }

    #[test]
    fn join_degrees(a in graph_upto(6), b in graph_upto(6), c in graph_upto(6)) {
        let parts = [a.clone(), b.clone(), c.clone()];
        let j = join(&parts).unwrap();
        let total: usize = parts.iter().map(Graph::order).sum();
        let mut offset = 0;
        for part in &parts {
            for v in 0..part.order() {
                prop_assert_eq!(j.degree(offset + v), part.degree(v) + total - part.order());
            }
            offset += part.order();
        }
        let left = join(&[join(&[a.clone(), b.clone()]).unwrap(), c.clone()]).unwrap();
        let right = join(&[a, join(&[b, c]).unwrap()]).unwrap();
        prop_assert_eq!(left.edges().collect::<Vec<_>>(), j.edges().collect::<Vec<_>>());
        prop_assert_eq!(right.edges().collect::<Vec<_>>(), j.edges().collect::<Vec<_>>());
    }

    #[test]
    fn copies_are_disjoint(g in graph_upto(6), k in 1usize..4) {
        let c = copies(k, &g).unwrap();
        prop_assert_eq!(c.order(), k * g.order());
        prop_assert_eq!(c.size(), k * g.size());
        for (u, v) in c.edges() {
            prop_assert_eq!(u / g.order(), v / g.order());
        }
    }

    #[test]
    fn complement_is_an_involution(g in graph_upto(12)) {
        let c = complement(&g);
        let n = g.order();
        prop_assert_eq!(c.size() + g.size(), n * n.saturating_sub(1) / 2);
        prop_assert_eq!(complement(&c), g);
    }

    #[test]
    fn json_round_trip(g in graph_upto(12)) {
        let back = Graph::from_json_str(&g.to_json_string()).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(g.to_dot().matches(" -- ").count(), g.size());
    }

    #[test]
    fn parser_round_trip(e in expr_tree()) {
        let text = unparse(&e);
        prop_assert_eq!(parse(&text).unwrap(), e);
    }

    #[test]
    fn relabeling_preserves_weights_and_verdict(
        (g, labels) in labeled_graph(7),
        seed in any::<u64>(),
    ) {
        use rand::SeedableRng;
        use rand::seq::SliceRandom;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let mut order: Vec<usize> = (0..g.order()).collect();
        order.shuffle(&mut rng);
        let h = g.permuted(&order).unwrap();
        let moved: Vec<u32> = order.iter().map(|&old| labels[old]).collect();
        let wg = weight_profile(&g, &Labeling::new(labels)).unwrap().weights;
        let wh = weight_profile(&h, &Labeling::new(moved)).unwrap().weights;
        for (new, &old) in order.iter().enumerate() {
            prop_assert_eq!(wh[new], wg[old]);
        }
        prop_assert_eq!(decide_small(&g).unwrap().kind, decide_small(&h).unwrap().kind);
        prop_assert_eq!(g.find_twin_pair().is_some(), h.find_twin_pair().is_some());
    }
}
