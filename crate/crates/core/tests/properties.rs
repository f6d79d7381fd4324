use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sombor_core::{
    are_isomorphic, canonical_key, from_graph6, sombor_coindex, sombor_index, to_graph6,
    total_pair_sum, Graph, TwoTreeRecipe,
};

fn recipe(orders: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = TwoTreeRecipe> {
    orders
        .prop_flat_map(|n| prop::collection::vec(any::<u32>(), n - 2))
        .prop_map(|raw| {
            let steps = raw
                .iter()
                .enumerate()
                .map(|(i, &r)| r as usize % (2 * i + 1))
                .collect();
            TwoTreeRecipe::new(steps).unwrap()
        })
}

fn shuffled(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    g.relabel(&perm)
}

/// Float evaluation straight from the definition, independent of the
/// weight table and radical arithmetic.
fn naive_so(g: &Graph) -> (f64, f64) {
    let d: Vec<f64> = (0..g.order()).map(|v| g.degree(v) as f64).collect();
    let (mut so, mut co) = (0.0, 0.0);
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            let w = (d[u] * d[u] + d[v] * d[v]).sqrt();
            if g.has_edge(u, v) {
                so += w;
            } else {
                co += w;
            }
        }
    }
    (so, co)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn key_ignores_labels(r in recipe(2..=20), seed in any::<u64>()) {
        let g = r.build().unwrap();
        let h = shuffled(&g, seed);
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
        prop_assert!(are_isomorphic(&g, &h));
    }

    #[test]
    fn indices_ignore_labels(r in recipe(3..=20), seed in any::<u64>()) {
        let g = r.build().unwrap();
        let h = shuffled(&g, seed);
        prop_assert_eq!(sombor_index(&g).exact, sombor_index(&h).exact);
        prop_assert_eq!(sombor_coindex(&g).exact, sombor_coindex(&h).exact);
    }

    #[test]
    fn recipes_build_two_trees(r in recipe(2..=40)) {
        let g = r.build().unwrap();
        prop_assert!(g.is_two_tree());
        prop_assert!(g.is_connected());
        prop_assert_eq!(g.edge_count(), 2 * g.order() - 3);
    }

    #[test]
    fn indices_match_naive_floats(r in recipe(3..=30)) {
        let g = r.build().unwrap();
        let (so, co) = naive_so(&g);
        let tol = 1e-9 * (1.0 + so + co);
        prop_assert!((sombor_index(&g).exact.to_f64() - so).abs() < tol);
        prop_assert!((sombor_coindex(&g).exact.to_f64() - co).abs() < tol);
    }

    #[test]
    fn partition_identity_random(r in recipe(12..=20)) {
        let g = r.build().unwrap();
        let sum = sombor_index(&g).exact + sombor_coindex(&g).exact;
        prop_assert_eq!(sum, total_pair_sum(&g).exact);
    }

    #[test]
    fn so_grows_along_prefixes(r in recipe(3..=25)) {
        let mut prev = r.prefix(0).build().map(|g| sombor_index(&g).exact).unwrap();
        for k in 1..=r.steps().len() {
            let cur = sombor_index(&r.prefix(k).build().unwrap()).exact;
            prop_assert!(cur > prev, "prefix {} of [{}]", k, r);
            prev = cur;
        }
    }

    #[test]
    fn graph6_round_trip(r in recipe(2..=64)) {
        let g = r.build().unwrap();
        let back = from_graph6(&to_graph6(&g)).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(canonical_key(&back), canonical_key(&g));
    }

    #[test]
    fn recipe_text_round_trip(r in recipe(2..=30)) {
        prop_assert_eq!(r.to_string().parse::<TwoTreeRecipe>().unwrap(), r);
    }
}

#[test]
fn graph6_round_trip_seeded_batch() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let n = rand::Rng::random_range(&mut rng, 2..=30);
        let g = TwoTreeRecipe::random(n, &mut rng).unwrap().build().unwrap();
        let back = from_graph6(&to_graph6(&g)).unwrap();
        assert!(are_isomorphic(&g, &back));
    }
}

#[test]
fn partition_identity_seeded_batch() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..200 {
        let n = 12 + i % 9;
        let g = TwoTreeRecipe::random(n, &mut rng).unwrap().build().unwrap();
        assert_eq!(
            sombor_index(&g).exact + sombor_coindex(&g).exact,
            total_pair_sum(&g).exact
        );
    }
}
