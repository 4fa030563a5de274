//! Column-by-column DP over a window of rows, seeded by a vector of values
//! on the first column. Values are lexicographic pairs packed into `i128`:
//! the high part counts back-edges, the low part is the weighted cost.

use crate::types::{Step, Sym, WeightFn};

pub(crate) const LEX: i128 = 1 << 64;
pub(crate) const UNREACH: i128 = 1 << 100;

const SEED: u8 = 0;
const DIAG: u8 = 1;
const DEL: u8 = 2;
const INS: u8 = 3;

/// Weight tables with infinite entries replaced by a finite cap.
pub(crate) struct Costs {
    a: usize,
    sub: Vec<i128>,
    ins: Vec<i128>,
    del: Vec<i128>,
}

impl Costs {
    pub(crate) fn new(w: &WeightFn, cap: u64) -> Costs {
        let a = w.alphabet_size();
        let f = |c: crate::types::Cost| c.num().unwrap_or(cap).min(cap) as i128;
        let mut sub = Vec::with_capacity(a * a);
        for x in 0..a as Sym {
            for y in 0..a as Sym {
                sub.push(if x == y { 0 } else { f(w.sub(x, y)) });
            }
        }
        let ins = (0..a as Sym).map(|b| f(w.ins(b))).collect();
        let del = (0..a as Sym).map(|b| f(w.del(b))).collect();
        Costs { a, sub, ins, del }
    }

    #[inline]
    pub(crate) fn diag(&self, x: Sym, y: Sym) -> i128 {
        if x == y {
            0
        } else {
            self.sub[x as usize * self.a + y as usize]
        }
    }

    #[inline]
    pub(crate) fn ins(&self, y: Sym) -> i128 {
        self.ins[y as usize]
    }

    #[inline]
    pub(crate) fn del(&self, x: Sym) -> i128 {
        self.del[x as usize]
    }

    pub(crate) fn del_sum(&self, x: &[Sym]) -> i128 {
        x.iter().map(|&c| self.del(c)).sum()
    }
}

/// Result of a strip run: the last column and, if traced, every column's
/// move table.
pub(crate) struct StripRun {
    pub(crate) lo: usize,
    pub(crate) vals: Vec<i128>,
    trace: Option<Trace>,
}

/// Move tables of all columns, stored back to back.
struct Trace {
    los: Vec<usize>,
    offsets: Vec<usize>,
    dirs: Vec<u8>,
}

/// Runs the DP over columns `xa..=xb`. Column `x` covers rows `win(x)`,
/// whose ends must be nondecreasing in `x`. `init[t]` seeds row
/// `win(xa).0 + t`.
pub(crate) fn strip_dp(
    x: &[Sym],
    y: &[Sym],
    c: &Costs,
    xa: usize,
    xb: usize,
    win: &dyn Fn(usize) -> (usize, usize),
    init: &[i128],
    trace: bool,
) -> StripRun {
    let (lo0, hi0) = win(xa);
    debug_assert_eq!(init.len(), hi0 + 1 - lo0);
    let mut cur: Vec<i128> = init.to_vec();
    let mut dirs0 = vec![SEED; cur.len()];
    for r in 1..cur.len() {
        let v = cur[r - 1] + c.ins(y[lo0 + r - 1]);
        if v <= cur[r] {
            cur[r] = v;
            dirs0[r] = INS;
        }
    }
    let mut tr = if trace {
        Some(Trace { los: vec![lo0], offsets: vec![0], dirs: dirs0 })
    } else {
        None
    };
    let mut plo = lo0;
    let mut prev = Vec::new();
    for col in xa..xb {
        std::mem::swap(&mut prev, &mut cur);
        let (lo, hi) = win(col + 1);
        let phi = plo + prev.len();
        let xc = x[col];
        let dc = c.del(xc);
        cur.clear();
        for row in lo..=hi {
            let mut best = UNREACH * 4;
            let mut dir = SEED;
            if row >= 1 && row - 1 >= plo && row - 1 < phi {
                best = prev[row - 1 - plo] + c.diag(xc, y[row - 1]);
                dir = DIAG;
            }
            if row >= plo && row < phi {
                let v = prev[row - plo] + dc;
                if v < best {
                    best = v;
                    dir = DEL;
                }
            }
            if row > lo {
                let v = cur[row - 1 - lo] + c.ins(y[row - 1]);
                if v < best {
                    best = v;
                    dir = INS;
                }
            }
            cur.push(best.min(UNREACH * 4));
            if let Some(t) = tr.as_mut() {
                t.dirs.push(dir);
            }
        }
        if let Some(t) = tr.as_mut() {
            t.los.push(lo);
            t.offsets.push(t.dirs.len() - (hi + 1 - lo));
        }
        plo = lo;
    }
    StripRun { lo: plo, vals: cur, trace: tr }
}

impl StripRun {
    /// Walks back from row `row` of the last column to a seed on the first
    /// column. Returns the seed row and the steps in forward order.
    pub(crate) fn path_to(&self, row: usize) -> (usize, Vec<Step>) {
        let t = self.trace.as_ref().expect("strip was not traced");
        let mut col = t.los.len() - 1;
        let mut r = row;
        let mut steps = Vec::new();
        loop {
            let d = t.dirs[t.offsets[col] + r - t.los[col]];
            match d {
                SEED => {
                    debug_assert_eq!(col, 0);
                    break;
                }
                DIAG => {
                    steps.push(Step::Diag);
                    col -= 1;
                    r -= 1;
                }
                DEL => {
                    steps.push(Step::Del);
                    col -= 1;
                }
                _ => {
                    steps.push(Step::Ins);
                    r -= 1;
                }
            }
        }
        steps.reverse();
        (r, steps)
    }

    pub(crate) fn get(&self, row: usize) -> i128 {
        self.vals[row - self.lo]
    }
}

/// A seed vector that is zero at offset `t` and unreachable elsewhere.
pub(crate) fn unit_seed(len: usize, t: usize) -> Vec<i128> {
    let mut v = vec![UNREACH; len];
    v[t] = 0;
    v
}
