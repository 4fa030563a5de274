#![allow(dead_code)]

use proptest::prelude::*;
use wedit::{Cost, Sym, WeightFn};

/// Normalized weights with numerators in `[den, 3 den]`, some entries infinite.
pub fn weights(max_alpha: usize) -> impl Strategy<Value = WeightFn> {
    (1..=max_alpha, 1u64..=4).prop_flat_map(|(a, den)| {
        let entry = prop_oneof![8 => (den..=3 * den).prop_map(Cost::new), 1 => Just(Cost::INF)];
        (
            prop::collection::vec(entry.clone(), a * a),
            prop::collection::vec(entry.clone(), a),
            prop::collection::vec(entry, a),
        )
            .prop_map(move |(mut sub, ins, del)| {
                for i in 0..a {
                    sub[i * a + i] = Cost::ZERO;
                }
                WeightFn::new(a, den, sub, ins, del).unwrap()
            })
    })
}

pub fn periodic(period: &[Sym], n: usize, muts: &[(usize, Sym)]) -> Vec<Sym> {
    let mut x: Vec<Sym> = (0..n).map(|i| period[i % period.len()]).collect();
    for &(pos, c) in muts {
        if n > 0 {
            x[pos % n] = c;
        }
    }
    x
}

#[derive(Clone, Debug)]
pub enum Edit {
    Sub(usize, Sym),
    Ins(usize, Sym),
    Del(usize),
}

pub fn edit_strategy(alpha: u32) -> impl Strategy<Value = Edit> {
    prop_oneof![
        (any::<usize>(), 0..alpha).prop_map(|(p, c)| Edit::Sub(p, c)),
        (any::<usize>(), 0..alpha).prop_map(|(p, c)| Edit::Ins(p, c)),
        any::<usize>().prop_map(Edit::Del),
    ]
}

pub fn apply_edits(x: &[Sym], edits: &[Edit]) -> Vec<Sym> {
    let mut y = x.to_vec();
    for e in edits {
        match *e {
            Edit::Sub(p, c) if !y.is_empty() => {
                let n = y.len();
                y[p % n] = c;
            }
            Edit::Ins(p, c) => {
                let n = y.len();
                y.insert(p % (n + 1), c);
            }
            Edit::Del(p) if !y.is_empty() => {
                let n = y.len();
                y.remove(p % n);
            }
            _ => {}
        }
    }
    y
}

/// Random Monge matrix: row and column offsets plus a dominance sum of
/// nonnegative densities, `M[i][j] = r_i + c_j + sum_{a >= i, b <= j} rho(a, b)`.
pub fn random_monge(rng: &mut impl rand::Rng, rows: usize, cols: usize, max_rho: u64) -> wedit::monge::Matrix<Cost> {
    let rho: Vec<Vec<u64>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..=max_rho)).collect()).collect();
    let r: Vec<u64> = (0..rows).map(|_| rng.gen_range(0..50)).collect();
    let c: Vec<u64> = (0..cols).map(|_| rng.gen_range(0..50)).collect();
    let mut g = vec![vec![0u64; cols + 1]; rows + 1];
    for i in (0..rows).rev() {
        for j in 0..cols {
            g[i][j + 1] = rho[i][j] + g[i + 1][j + 1] + g[i][j] - g[i + 1][j];
        }
    }
    wedit::monge::Matrix::from_fn(rows, cols, |i, j| Cost::new(r[i] + c[j] + g[i][j + 1]))
}
