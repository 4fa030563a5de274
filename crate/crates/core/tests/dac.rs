mod common;

use common::{apply_edits, edit_strategy, periodic, weights};
use proptest::prelude::*;
use wedit::dac::{wed_auto, weighted_ed, Engine, SolverConfig};
use wedit::oracle::{wed_banded, wed_quadratic};
use wedit::{Cost, Sym, WeightFn};

fn pair(max_n: usize) -> impl Strategy<Value = (Vec<Sym>, Vec<Sym>, WeightFn)> {
    weights(4).prop_flat_map(move |w| {
        let a = w.alphabet_size() as Sym;
        (
            prop::collection::vec(0..a, 1..4),
            0..=max_n,
            prop::collection::vec((any::<usize>(), 0..a), 0..4),
            prop::collection::vec(edit_strategy(a), 0..10),
            Just(w),
        )
            .prop_map(|(period, n, muts, edits, w)| {
                let x = periodic(&period, n, &muts);
                let y = apply_edits(&x, &edits);
                (x, y, w)
            })
    })
}

fn check(x: &[Sym], y: &[Sym], w: &WeightFn, k: u64, engine: Engine) -> Result<(), TestCaseError> {
    let cfg = SolverConfig { engine, ..SolverConfig::default() };
    let r = weighted_ed(x, y, k, w, &cfg);
    prop_assert_eq!(r.cost, wed_banded(x, y, w, k).unwrap());
    if r.cost.is_finite() {
        let a = r.alignment.expect("witness");
        prop_assert_eq!(a.cost(x, y, w).unwrap(), r.cost);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn threshold_matches_banded((x, y, w) in pair(200), k in 1u64..40) {
        check(&x, &y, &w, k, Engine::Pillar)?;
        check(&x, &y, &w, k, Engine::Standard)?;
    }

    #[test]
    fn auto_is_exact((x, y, w) in pair(80)) {
        let exact = wed_quadratic(&x, &y, &w).cost;
        for engine in [Engine::Pillar, Engine::Standard] {
            let cfg = SolverConfig { engine, ..SolverConfig::default() };
            prop_assert_eq!(wed_auto(&x, &y, &w, &cfg).cost, exact);
        }
    }

    #[test]
    fn depth_is_logarithmic((x, y, w) in pair(400), k in 1u64..8) {
        let cfg = SolverConfig { engine: Engine::Standard, witness: false, ..SolverConfig::default() };
        let r = weighted_ed(&x, &y, k, &w, &cfg);
        let n = x.len().max(y.len()).max(2);
        prop_assert!(r.stats.depth <= 2 * (usize::BITS - n.leading_zeros()) as usize);
    }
}

#[test]
fn splits_happen() {
    let w = WeightFn::unit(4);
    let x: Vec<Sym> = (0..2000u32).map(|i| (i * 7 + i / 13) % 4).collect();
    let mut y = x.clone();
    y[100] = (y[100] + 1) % 4;
    y.remove(1500);
    for engine in [Engine::Pillar, Engine::Standard] {
        let cfg = SolverConfig { engine, ..SolverConfig::default() };
        let r = weighted_ed(&x, &y, 4, &w, &cfg);
        assert_eq!(r.cost, Cost::new(2));
        assert!(r.stats.splits > 0);
        assert_eq!(r.alignment.unwrap().cost(&x, &y, &w).unwrap(), Cost::new(2));
    }
}
