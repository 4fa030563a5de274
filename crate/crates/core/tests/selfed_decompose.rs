use proptest::prelude::*;

use wedit::decompose::{decompose_pillar, decompose_std};
use wedit::oracle::{ed_quadratic, selfed_brute};
use wedit::pillar::{build_index, Pillar, PlainText};
use wedit::selfed::{ed_bounded, selfed_bounded, selfed_prefix_reach, Direction};
use wedit::Sym;

fn periodic(period: Vec<Sym>, n: usize, muts: Vec<(usize, Sym)>) -> Vec<Sym> {
    let mut x: Vec<Sym> = (0..n).map(|i| period[i % period.len()]).collect();
    for (pos, c) in muts {
        if n > 0 {
            x[pos % n] = c;
        }
    }
    x
}

fn periodic_strategy(max_n: usize) -> impl Strategy<Value = Vec<Sym>> {
    (
        prop::collection::vec(0u32..4, 1..7),
        0..=max_n,
        prop::collection::vec((0usize..10_000, 0u32..4), 0..4),
    )
        .prop_map(|(p, n, m)| periodic(p, n, m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ed_bounded_matches_dp(x in prop::collection::vec(0u32..3, 0..40),
                             y in prop::collection::vec(0u32..3, 0..40),
                             k in 0usize..30) {
        let p = PlainText::new(&[&x, &y]);
        let r = ed_bounded(&p, p.whole(0), p.whole(1), k);
        let e = ed_quadratic(&x, &y);
        if e <= k {
            prop_assert_eq!(r.value, Some(e));
            prop_assert_eq!(r.alignment.unwrap().unit_cost(&x, &y).unwrap(), e);
        } else {
            prop_assert_eq!(r.value, None);
        }
    }

    #[test]
    fn selfed_matches_brute(x in periodic_strategy(40), k in 0usize..80) {
        let ix = build_index(&[&x, &[0]]).unwrap();
        let r = selfed_bounded(&ix, ix.whole(0), k);
        let e = selfed_brute(&x);
        if e <= k {
            prop_assert_eq!(r.value, Some(e));
            let a = r.alignment.unwrap();
            prop_assert_eq!(a.unit_cost(&x, &x).unwrap(), e);
            for w in a.expand().windows(2) {
                let diag_edge = w[0].0 == w[0].1 && w[1] == (w[0].0 + 1, w[0].1 + 1);
                prop_assert!(!diag_edge);
            }
        } else {
            prop_assert_eq!(r.value, None);
        }
    }

    #[test]
    fn selfed_properties(x in periodic_strategy(20), y in periodic_strategy(20), cut in 0usize..20) {
        let sx = selfed_brute(&x);
        let rev: Vec<Sym> = x.iter().rev().copied().collect();
        prop_assert_eq!(selfed_brute(&rev), sx);
        if !x.is_empty() {
            prop_assert!(sx >= 2);
        }
        let m = cut.min(x.len());
        prop_assert!(sx <= selfed_brute(&x[..m]) + selfed_brute(&x[m..]));
        prop_assert!(selfed_brute(&x[..m]) <= sx);
        prop_assert!(selfed_brute(&y) <= sx + 2 * ed_quadratic(&x, &y));
    }

    #[test]
    fn prefix_reach_is_extremal(x in periodic_strategy(40), k in 0usize..20) {
        let p = PlainText::new(&[&x]);
        let n = x.len();
        let f = selfed_prefix_reach(&p, p.whole(0), k, Direction::Forward);
        prop_assert!(selfed_brute(&x[..f]) <= k);
        prop_assert!(f == n || selfed_brute(&x[..f + 1]) > k);
        let b = selfed_prefix_reach(&p, p.whole(0), k, Direction::Backward);
        prop_assert!(selfed_brute(&x[n - b..]) <= k);
        prop_assert!(b == n || selfed_brute(&x[n - b - 1..]) > k);
    }

    #[test]
    fn decompositions_hold(x in periodic_strategy(400), lsel in 0usize..3) {
        let n = x.len();
        prop_assume!(n > 0);
        let ix = build_index(&[&x]).unwrap();
        let k = selfed_bounded(&ix, ix.whole(0), 2 * n).value.unwrap();
        let d = decompose_pillar(&ix, ix.whole(0), k).unwrap();
        prop_assert_eq!(d.validate(&x, 2 * k, usize::MAX, true), Ok(()));
        let l = [1, (n as f64).sqrt().ceil() as usize, n][lsel];
        let p = PlainText::new(&[&x]);
        let d = decompose_std(&p, p.whole(0), k, l).unwrap();
        prop_assert_eq!(d.validate(&x, 3 * k, (2 * l - 1).max(k), false), Ok(()));
        let again = decompose_std(&p, p.whole(0), k, l).unwrap();
        prop_assert_eq!(d, again);
    }
}
