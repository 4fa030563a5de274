//! Reference dynamic programs. Slow on purpose; everything else is tested
//! against these.

use thiserror::Error;

use crate::types::{Alignment, Cost, Step, Sym, WeightFn};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DPResult {
    pub cost: Cost,
    pub alignment: Option<Alignment>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("weight function is not normalized; band pruning would be unsound")]
    NotNormalized,
}

const FROM_DIAG: u8 = 1;
const FROM_DEL: u8 = 2;
const FROM_INS: u8 = 3;

/// DP over the diagonals `lo..=hi` (`h = y - x`), values above `limit`
/// pruned to infinity. Returns the cost at `(nx, ny)` and, if asked, the
/// tie-broken optimal path.
fn band_dp(
    x: &[Sym],
    y: &[Sym],
    w: &WeightFn,
    lo: i64,
    hi: i64,
    limit: Option<u64>,
    trace: bool,
) -> DPResult {
    let (nx, ny) = (x.len(), y.len());
    let target = ny as i64 - nx as i64;
    if target < lo || target > hi {
        return DPResult { cost: Cost::INF, alignment: None };
    }
    let width = (hi - lo + 1) as usize;
    let mut prev = vec![Cost::INF; width];
    let mut cur = vec![Cost::INF; width];
    let mut dirs = if trace { vec![0u8; (nx + 1) * width] } else { Vec::new() };
    let prune = |c: Cost| match limit {
        Some(l) => c.cap(l),
        None => c,
    };
    for i in 0..=nx {
        cur.fill(Cost::INF);
        let ylo = (i as i64 + lo).max(0) as usize;
        let yhi = (i as i64 + hi).min(ny as i64);
        if yhi < ylo as i64 {
            if limit.is_some() {
                return DPResult { cost: Cost::INF, alignment: None };
            }
            std::mem::swap(&mut prev, &mut cur);
            continue;
        }
        let mut any = false;
        for j in ylo..=yhi as usize {
            let h = (j as i64 - i as i64 - lo) as usize;
            let mut best = Cost::INF;
            let mut dir = 0u8;
            if i == 0 && j == 0 {
                best = Cost::ZERO;
            }
            if i > 0 && j > 0 {
                let c = prev[h] + if x[i - 1] == y[j - 1] { Cost::ZERO } else { w.sub(x[i - 1], y[j - 1]) };
                if c < best {
                    best = c;
                    dir = FROM_DIAG;
                }
            }
            if i > 0 && h + 1 < width {
                let c = prev[h + 1] + w.del(x[i - 1]);
                if c < best {
                    best = c;
                    dir = FROM_DEL;
                }
            }
            if j > 0 && h > 0 {
                let c = cur[h - 1] + w.ins(y[j - 1]);
                if c < best {
                    best = c;
                    dir = FROM_INS;
                }
            }
            let best = prune(best);
            if best.is_finite() {
                any = true;
            }
            cur[h] = best;
            if trace {
                dirs[i * width + h] = dir;
            }
        }
        if !any && limit.is_some() {
            return DPResult { cost: Cost::INF, alignment: None };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    let cost = prev[(target - lo) as usize];
    if !trace || cost.is_inf() {
        return DPResult { cost, alignment: None };
    }
    let mut steps = Vec::new();
    let (mut i, mut j) = (nx, ny);
    while i > 0 || j > 0 {
        let h = (j as i64 - i as i64 - lo) as usize;
        match dirs[i * width + h] {
            FROM_DIAG => {
                steps.push(Step::Diag);
                i -= 1;
                j -= 1;
            }
            FROM_DEL => {
                steps.push(Step::Del);
                i -= 1;
            }
            FROM_INS => {
                steps.push(Step::Ins);
                j -= 1;
            }
            _ => unreachable!("broken traceback"),
        }
    }
    steps.reverse();
    DPResult { cost, alignment: Some(Alignment::from_steps_canonical((0, 0), &steps, x, y)) }
}

/// Textbook `O(|X|·|Y|)` DP with an optimal alignment.
///
/// Ties prefer the diagonal, then the deletion, then the insertion
/// predecessor, scanning back from `(|X|, |Y|)`.
pub fn wed_quadratic(x: &[Sym], y: &[Sym], w: &WeightFn) -> DPResult {
    band_dp(x, y, w, -(x.len() as i64), y.len() as i64, None, true)
}

/// `wed(X, Y)` if at most `k`, else infinity. Only `|x - y| <= k` is explored.
pub fn wed_banded(x: &[Sym], y: &[Sym], w: &WeightFn, k: u64) -> Result<Cost, OracleError> {
    Ok(wed_banded_full(x, y, w, k, false)?.cost)
}

/// [`wed_banded`] with an optional optimal alignment.
pub fn wed_banded_full(
    x: &[Sym],
    y: &[Sym],
    w: &WeightFn,
    k: u64,
    trace: bool,
) -> Result<DPResult, OracleError> {
    if !w.is_normalized() {
        return Err(OracleError::NotNormalized);
    }
    let limit = k.saturating_mul(w.denominator());
    let kk = k.min((x.len() + y.len()) as u64) as i64;
    Ok(band_dp(x, y, w, -kk, kk, Some(limit), trace))
}

/// Unit-cost edit distance.
pub fn ed_quadratic(x: &[Sym], y: &[Sym]) -> usize {
    let mut prev: Vec<usize> = (0..=y.len()).collect();
    let mut cur = vec![0; y.len() + 1];
    for i in 1..=x.len() {
        cur[0] = i;
        for j in 1..=y.len() {
            let diag = prev[j - 1] + usize::from(x[i - 1] != y[j - 1]);
            cur[j] = diag.min(prev[j] + 1).min(cur[j - 1] + 1);
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[y.len()]
}

/// Self edit distance: unit-cost DP over `X` against itself with every
/// main-diagonal edge removed.
pub fn selfed_brute(x: &[Sym]) -> usize {
    let n = x.len();
    const INF: usize = usize::MAX / 2;
    let mut prev = vec![INF; n + 1];
    let mut cur = vec![INF; n + 1];
    for i in 0..=n {
        for j in 0..=n {
            let mut best = if i == 0 && j == 0 { 0 } else { INF };
            if i > 0 && j > 0 && i != j {
                best = best.min(prev[j - 1] + usize::from(x[i - 1] != x[j - 1]));
            }
            if i > 0 {
                best = best.min(prev[j] + 1);
            }
            if j > 0 {
                best = best.min(cur[j - 1] + 1);
            }
            cur[j] = best;
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[n]
}

/// The four relaxed distances, each capped at `d`: `[full, suffix_free,
/// prefix_free, substring]` where suffix-free frees the start in `Y`,
/// prefix-free frees the end and substring frees both.
pub fn four_way_brute(x: &[Sym], y: &[Sym], w: &WeightFn, d: u64) -> [Cost; 4] {
    let limit = d.saturating_mul(w.denominator());
    let run = |free_start: bool| -> Vec<Cost> {
        let ny = y.len();
        let mut prev = vec![Cost::INF; ny + 1];
        let mut cur = vec![Cost::INF; ny + 1];
        for i in 0..=x.len() {
            for j in 0..=ny {
                let mut best = if i == 0 && (j == 0 || free_start) { Cost::ZERO } else { Cost::INF };
                if i > 0 && j > 0 {
                    let c = if x[i - 1] == y[j - 1] { Cost::ZERO } else { w.sub(x[i - 1], y[j - 1]) };
                    best = best.min(prev[j - 1] + c);
                }
                if i > 0 {
                    best = best.min(prev[j] + w.del(x[i - 1]));
                }
                if j > 0 {
                    best = best.min(cur[j - 1] + w.ins(y[j - 1]));
                }
                cur[j] = best;
            }
            std::mem::swap(&mut prev, &mut cur);
        }
        prev
    };
    let fixed = run(false);
    let free = run(true);
    let ny = y.len();
    [
        fixed[ny].cap(limit),
        free[ny].cap(limit),
        fixed.iter().copied().min().unwrap().cap(limit),
        free.iter().copied().min().unwrap().cap(limit),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(text: &str) -> Vec<Sym> {
        text.bytes().map(|b| (b - b'a') as Sym).collect()
    }

    #[test]
    fn kitten_sitting() {
        let w = WeightFn::unit(26);
        let r = wed_quadratic(&s("kitten"), &s("sitting"), &w);
        assert_eq!(r.cost, Cost::new(3));
        let a = r.alignment.unwrap();
        assert_eq!(a.cost(&s("kitten"), &s("sitting"), &w).unwrap(), Cost::new(3));
        assert_eq!(ed_quadratic(&s("kitten"), &s("sitting")), 3);
    }

    #[test]
    fn empty_x_is_all_insertions() {
        let w = WeightFn::new(
            2,
            3,
            vec![Cost::ZERO, Cost::new(4), Cost::new(5), Cost::ZERO],
            vec![Cost::new(3), Cost::new(7)],
            vec![Cost::new(3), Cost::new(3)],
        )
        .unwrap();
        assert_eq!(wed_quadratic(&[], &[0, 1, 1], &w).cost, Cost::new(17));
    }

    #[test]
    fn banded_examples() {
        let w = WeightFn::unit(26);
        assert_eq!(wed_banded(&s("abc"), &s("abc"), &w, 0).unwrap(), Cost::ZERO);
        assert_eq!(wed_banded(&s("abc"), &s("abd"), &w, 0).unwrap(), Cost::INF);
        assert_eq!(wed_banded(&s("abc"), &s("abd"), &w, 1).unwrap(), Cost::new(1));
    }

    #[test]
    fn banded_rejects_unnormalized() {
        let w = WeightFn::new(1, 2, vec![Cost::ZERO], vec![Cost::new(1)], vec![Cost::new(2)]).unwrap();
        assert_eq!(wed_banded(&[0], &[], &w, 3), Err(OracleError::NotNormalized));
    }

    #[test]
    fn selfed_examples() {
        assert_eq!(selfed_brute(&[]), 0);
        assert_eq!(selfed_brute(&s("aa")), 2);
        assert_eq!(selfed_brute(&s("ab")), 3);
    }

    #[test]
    fn four_way_on_exact_occurrence() {
        let w = WeightFn::unit(26);
        let r = four_way_brute(&s("bcd"), &s("abcde"), &w, 2);
        assert_eq!(r, [Cost::new(2), Cost::new(1), Cost::new(1), Cost::ZERO]);
    }
}
