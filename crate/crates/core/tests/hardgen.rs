use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wedit::hardgen::{
    combine_batch, gen_three_matrix_gadget, gen_two_matrix_gadget, min_triangle, predicted_distance, random_matrix,
    GadgetParams,
};
use wedit::oracle::wed_quadratic;
use wedit::Cost;

fn params(max_p: usize, max_q: usize, max_r: usize, max_e: i64) -> impl Strategy<Value = GadgetParams> {
    (1..=max_p, 1..=max_q, 1..=max_r, 0..=max_e, any::<u64>()).prop_flat_map(|(p, q, r, e, seed)| {
        (1..=p).prop_map(move |tau| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let a = random_matrix(&mut rng, p, q, e);
            let b = random_matrix(&mut rng, q, r, e);
            let c = random_matrix(&mut rng, r, p, e);
            GadgetParams::new(a, b, c, tau, e).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(120))]

    #[test]
    fn two_matrix_closed_form(p in 1usize..4, q in 1usize..4, r in 1usize..3, e in 0i64..4, seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(&mut rng, p, q, e);
        let b = random_matrix(&mut rng, q, r, e);
        let g = gen_two_matrix_gadget(&a, &b, e).unwrap();
        for l in 0..r {
            prop_assert_eq!(g.xs[l].len(), 2 * p + 1);
            for i in 0..p {
                let x = &g.xs[l][i..2 * p + 1 - i];
                prop_assert_eq!(wed_quadratic(x, &g.y, &g.weights).cost, g.predicted(l, i));
            }
        }
    }

    #[test]
    fn three_matrix_closed_form(g in params(5, 5, 3, 3)) {
        let batch = gen_three_matrix_gadget(&g).unwrap();
        prop_assert!(batch.weights.is_normalized() && batch.weights.is_symmetric());
        for (x, label) in batch.xs.iter().zip(&batch.labels) {
            let (l, i) = label.unwrap();
            prop_assert_eq!(wed_quadratic(x, &batch.y, &batch.weights).cost, predicted_distance(&g, l, i));
        }
    }

    #[test]
    fn batch_decides_triangle_sign(g in params(4, 3, 3, 2), budget in prop::option::of(2usize..4)) {
        let g = GadgetParams { hamming_budget: budget, ..g };
        let batch = gen_three_matrix_gadget(&g).unwrap();
        let k = Cost::new(batch.k);
        let mut best = Cost::INF;
        for (x, label) in batch.xs.iter().zip(&batch.labels) {
            let d = wed_quadratic(x, &batch.y, &batch.weights).cost;
            if label.is_none() {
                prop_assert!(d > k);
            }
            best = best.min(d);
        }
        prop_assert_eq!(best <= k, min_triangle(&g.a, &g.b, &g.c) <= 0);
    }

    #[test]
    fn combined_instance_is_equivalent(g in params(3, 2, 2, 2), budget in prop::option::of(2usize..4)) {
        let g = GadgetParams { hamming_budget: budget, ..g };
        let batch = gen_three_matrix_gadget(&g).unwrap();
        let k = Cost::new(batch.k);
        let batch_hit = batch.xs.iter().any(|x| wed_quadratic(x, &batch.y, &batch.weights).cost <= k);
        let comb = combine_batch(&batch).unwrap();
        let hit = wed_quadratic(&comb.x, &comb.y, &comb.weights).cost <= Cost::new(comb.k);
        prop_assert_eq!(batch_hit, hit);
    }
}
