mod common;

use common::{random_monge, weights};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wedit::dac::{split, Engine, SolverConfig, SplitOutcome};
use wedit::hardgen::{gen_three_matrix_gadget, random_matrix, GadgetParams};
use wedit::monge::{
    is_monge, monge_minplus, monge_power, naive_minplus, naive_row_minima, smawk_row_minima, Matrix,
};
use wedit::oracle::{ed_quadratic, four_way_brute, selfed_brute, wed_banded, wed_quadratic};
use wedit::pillar::{build_index, Fragment, Pillar, PlainText};
use wedit::{Alignment, Cost, Step, Sym, WeightFn};

fn steps() -> impl Strategy<Value = Vec<Step>> {
    prop::collection::vec(prop_oneof![2 => Just(Step::Diag), 1 => Just(Step::Del), 1 => Just(Step::Ins)], 0..40)
}

/// Strings of the right lengths for an alignment starting at the origin.
fn texts_for(a: &Alignment, alpha: u32, seed: u64) -> (Vec<Sym>, Vec<Sym>) {
    use rand::Rng;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (nx, ny) = a.end();
    let x = (0..nx).map(|_| rng.gen_range(0..alpha)).collect();
    let y = (0..ny).map(|_| rng.gen_range(0..alpha)).collect();
    (x, y)
}

/// Shortest-path closure of a symmetrized weight table, which is a metric.
fn metric(w: &WeightFn) -> WeightFn {
    let a = w.alphabet_size();
    let e = a + 1;
    let mut d: Vec<Vec<Cost>> = (0..e)
        .map(|i| (0..e).map(|j| w.get(i as Sym, j as Sym).min(w.get(j as Sym, i as Sym))).collect())
        .collect();
    for m in 0..e {
        for i in 0..e {
            for j in 0..e {
                d[i][j] = d[i][j].min(d[i][m] + d[m][j]);
            }
        }
    }
    let sub = (0..a * a).map(|t| d[t / a][t % a]).collect();
    let ins = (0..a).map(|b| d[a][b]).collect();
    let del = (0..a).map(|b| d[b][a]).collect();
    WeightFn::new(a, w.denominator(), sub, ins, del).unwrap()
}

fn text(max_n: usize) -> impl Strategy<Value = Vec<Sym>> {
    prop::collection::vec(0u32..3, 0..=max_n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn expanded_alignments_are_staircases(s in steps(), dx in 0usize..5, dy in 0usize..5) {
        let a = Alignment::from_steps((dx, dy), &s);
        let pts = a.expand();
        prop_assert_eq!(pts[0], a.start());
        prop_assert_eq!(*pts.last().unwrap(), a.end());
        for p in pts.windows(2) {
            let d = (p[1].0 - p[0].0, p[1].1 - p[0].1);
            prop_assert!(d == (1, 0) || d == (0, 1) || d == (1, 1));
        }
        prop_assert_eq!(a.steps(), s.clone());
        prop_assert_eq!(Alignment::from_points(&pts).unwrap(), a);
    }

    #[test]
    fn weighted_cost_dominates_unit_cost(s in steps(), w in weights(3), seed: u64) {
        let a = Alignment::from_steps((0, 0), &s);
        let (x, y) = texts_for(&a, w.alphabet_size() as u32, seed);
        let c = a.cost(&x, &y, &w).unwrap();
        let unit = a.unit_cost(&x, &y).unwrap() as u64;
        if let Some(v) = c.num() {
            prop_assert!(v >= unit * w.denominator());
        }
    }

    #[test]
    fn split_conserves_cost(s in steps(), w in weights(3), seed: u64, at in any::<prop::sample::Index>()) {
        let a = Alignment::from_steps((0, 0), &s);
        let (x, y) = texts_for(&a, w.alphabet_size() as u32, seed);
        let pts = a.expand();
        let p = pts[at.index(pts.len())];
        let (l, r) = a.split_at(p).unwrap();
        let total = l.cost(&x, &y, &w).unwrap() + r.cost(&x, &y, &w).unwrap();
        prop_assert_eq!(total, a.cost(&x, &y, &w).unwrap());
        prop_assert_eq!(l.concat(&r).unwrap().expand(), pts);
    }

    #[test]
    fn composition_is_subadditive_under_metrics(s1 in steps(), s2 in steps(), w in weights(3), seed: u64) {
        let w = metric(&w);
        let alpha = w.alphabet_size() as u32;
        let a = Alignment::from_steps((0, 0), &s1);
        let (x, y) = texts_for(&a, alpha, seed);
        // second alignment must start from |Y|
        let ny = y.len();
        let mut s2 = s2;
        let consumed = |s: &[Step]| s.iter().filter(|&&t| t != Step::Ins).count();
        while consumed(&s2) < ny {
            s2.push(Step::Del);
        }
        while consumed(&s2) > ny {
            let i = s2.iter().rposition(|&t| t != Step::Ins).unwrap();
            s2.remove(i);
        }
        let b = Alignment::from_steps((0, 0), &s2);
        let (_, z) = texts_for(&b, alpha, seed ^ 1);
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.start(), (0, 0));
        prop_assert_eq!(ab.end(), (x.len(), z.len()));
        let lhs = ab.cost(&x, &z, &w).unwrap();
        prop_assert!(lhs <= a.cost(&x, &y, &w).unwrap() + b.cost(&y, &z, &w).unwrap());
    }

    #[test]
    fn cigar_round_trips(s in steps(), seed: u64) {
        let a = Alignment::from_steps((0, 0), &s);
        let (x, y) = texts_for(&a, 2, seed);
        let c = a.cigar(&x, &y);
        prop_assert_eq!(Alignment::from_cigar((0, 0), &c).unwrap(), a);
    }

    #[test]
    fn weights_json_round_trip(w in weights(4)) {
        prop_assert_eq!(WeightFn::from_json(&w.to_json()).unwrap(), w);
    }

    #[test]
    fn banded_matches_quadratic(x in text(128), y in text(128), w in weights(3), k in 0u64..160) {
        let a = w.alphabet_size() as Sym;
        let x: Vec<Sym> = x.into_iter().map(|c| c % a).collect();
        let y: Vec<Sym> = y.into_iter().map(|c| c % a).collect();
        let q = wed_quadratic(&x, &y, &w);
        let b = wed_banded(&x, &y, &w, k).unwrap();
        if q.cost.num().is_some_and(|v| v <= k * w.denominator()) {
            prop_assert_eq!(b, q.cost);
        } else {
            prop_assert!(b.is_inf());
        }
        if let Some(al) = q.alignment {
            prop_assert_eq!(al.cost(&x, &y, &w).unwrap(), q.cost);
        }
    }

    #[test]
    fn four_way_quantities_are_ordered(x in text(30), y in text(30), w in weights(3), d in 0u64..12) {
        let a = w.alphabet_size() as Sym;
        let x: Vec<Sym> = x.into_iter().map(|c| c % a).collect();
        let y: Vec<Sym> = y.into_iter().map(|c| c % a).collect();
        let [full, suf, pre, sub] = four_way_brute(&x, &y, &w, d);
        prop_assert!(full >= suf && full >= pre && suf >= sub && pre >= sub);
    }

    #[test]
    fn selfed_brute_properties(x in text(20), y in text(20), cut in any::<prop::sample::Index>()) {
        let s = selfed_brute(&x);
        if !x.is_empty() {
            prop_assert!(s >= 2);
        }
        let rev: Vec<Sym> = x.iter().rev().copied().collect();
        prop_assert_eq!(selfed_brute(&rev), s);
        let m = cut.index(x.len() + 1);
        prop_assert!(s <= selfed_brute(&x[..m]) + selfed_brute(&x[m..]));
        for l in 0..=m {
            prop_assert!(selfed_brute(&x[l..m]) <= s);
        }
        prop_assert!(selfed_brute(&y) <= s + 2 * ed_quadratic(&x, &y));
    }

    #[test]
    fn lce_matches_naive(a in text(60), b in text(60), picks in prop::collection::vec((0usize..2, any::<prop::sample::Index>(), any::<prop::sample::Index>(), 0usize..2, any::<prop::sample::Index>(), any::<prop::sample::Index>()), 1..20)) {
        let strs = [&a[..], &b[..]];
        let ix = build_index(&strs).unwrap();
        let pt = PlainText::new(&strs);
        let frag = |s: usize, i: &prop::sample::Index, j: &prop::sample::Index| {
            let n = strs[s].len();
            let (p, q) = (i.index(n + 1), j.index(n + 1));
            Fragment::new(s, p.min(q), p.max(q))
        };
        for (s1, i1, j1, s2, i2, j2) in &picks {
            let f = frag(*s1, i1, j1);
            let g = frag(*s2, i2, j2);
            let (u, v) = (&strs[*s1][f.start..f.end], &strs[*s2][g.start..g.end]);
            let lcp = u.iter().zip(v).take_while(|(p, q)| p == q).count();
            let lcs = u.iter().rev().zip(v.iter().rev()).take_while(|(p, q)| p == q).count();
            prop_assert_eq!(ix.lcp(f, g), lcp);
            prop_assert_eq!(pt.lcp(f, g), lcp);
            prop_assert_eq!(ix.lcs(f, g), lcs);
            prop_assert_eq!(pt.lcs(f, g), lcs);
            prop_assert_eq!(ix.extract(f), u);
        }
    }

    #[test]
    fn smawk_and_products_on_monge(seed: u64, r in 1usize..24, c in 1usize..24, s in 1usize..24) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_monge(&mut rng, r, c, 4);
        let b = random_monge(&mut rng, c, s, 4);
        prop_assert!(is_monge(&a) && is_monge(&b));
        prop_assert_eq!(smawk_row_minima(r, c, |i, j| a.get(i, j)), naive_row_minima(&a));
        let ab = monge_minplus(&a, &b).unwrap();
        prop_assert_eq!(&ab, &naive_minplus(&a, &b).unwrap());
        prop_assert!(is_monge(&ab));
    }

    #[test]
    fn monge_powers_associate(seed: u64, n in 1usize..10, e1 in 1u64..5, e2 in 1u64..5) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d: Matrix<Cost> = random_monge(&mut rng, n, n, 3);
        let lhs = monge_power(&d, e1 + e2);
        let rhs = monge_minplus(&monge_power(&d, e1), &monge_power(&d, e2)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn split_conserves_distance(x in text(60), y in text(60), w in weights(3), k in 1u64..30, d in 1u64..8, std in any::<bool>()) {
        let a = w.alphabet_size() as Sym;
        let x: Vec<Sym> = x.into_iter().map(|c| c % a).collect();
        let y: Vec<Sym> = y.into_iter().map(|c| c % a).collect();
        let engine = if std { Engine::Standard } else { Engine::Pillar };
        let cfg = SolverConfig { engine, ..SolverConfig::default() };
        if let SplitOutcome::Cut { x_cut, y_cut } = split(&x, &y, d, k, &w, &cfg) {
            prop_assert_eq!(x_cut, x.len() / 2);
            let whole = wed_quadratic(&x, &y, &w).cost;
            if whole.num().is_some_and(|v| v <= k * w.denominator()) {
                let parts = wed_quadratic(&x[..x_cut], &y[..y_cut], &w).cost + wed_quadratic(&x[x_cut..], &y[y_cut..], &w).cost;
                prop_assert_eq!(parts, whole);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gadget_weights_are_a_metric(p in 1usize..4, q in 1usize..3, r in 1usize..3, e in 0i64..3, seed: u64, t in any::<prop::sample::Index>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a = random_matrix(&mut rng, p, q, e);
        let b = random_matrix(&mut rng, q, r, e);
        let c = random_matrix(&mut rng, r, p, e);
        let g = GadgetParams::new(a, b, c, t.index(p) + 1, e).unwrap();
        let w = gen_three_matrix_gadget(&g).unwrap().weights;
        prop_assert!(w.is_normalized() && w.is_symmetric());
        let n = w.alphabet_size() as Sym + 1;
        for u in 0..n {
            for v in 0..n {
                for m in 0..n {
                    prop_assert!(w.get(u, v) <= w.get(u, m) + w.get(m, v));
                }
            }
        }
    }
}
