use super::strip::{strip_dp, unit_seed, Costs, StripRun, LEX};
use super::{
    band_window, build_alignment, column0_seeds, costs_for, precheck, solve_direct, targets, to_cost,
    BandError, FourWayResult, Quantity, Witnessed,
};
use crate::decompose::decompose_pillar_with;
use crate::monge::{monge_power_table, vec_minplus, Matrix, PowerTable};
use crate::pillar::{Fragment, Pillar};
use crate::selfed::{ed_bounded, selfed_bounded};
use crate::types::{Alignment, Step, WeightFn};

struct Strips<'a, P: Pillar> {
    ix: &'a P,
    x: Fragment,
    y: Fragment,
    b: Vec<usize>,
    d: usize,
    c: Costs,
}

impl<P: Pillar> Strips<'_, P> {
    fn lo(&self, col: usize) -> usize {
        col.saturating_sub(self.d)
    }

    fn hi(&self, col: usize) -> usize {
        self.y.len().min(col + 3 * self.d)
    }

    fn width(&self, col: usize) -> usize {
        self.hi(col) + 1 - self.lo(col)
    }

    /// DP across strip `i` seeded on its left column. Rows of the result are
    /// relative to `lo(b[i])`.
    fn run(&self, i: usize, init: &[i128], trace: bool) -> StripRun {
        let (xa, xb) = (self.b[i], self.b[i + 1]);
        let ylo = self.lo(xa);
        let xs = self.ix.extract(self.x.sub(xa, xb));
        let ys = self.ix.extract(self.y.sub(ylo, self.hi(xb)));
        let (d, ny) = (self.d, self.y.len());
        let win = move |c: usize| {
            let (l, h) = band_window(d, ny)(xa + c);
            (l - ylo, h - ylo)
        };
        strip_dp(xs, ys, &self.c, 0, xb - xa, &win, init, trace)
    }

    /// Distances from the left to the right column of strip `i`.
    fn matrix(&self, i: usize) -> Matrix<i128> {
        let (xa, xb) = (self.b[i], self.b[i + 1]);
        let (la, lb) = (self.lo(xa), self.lo(xb));
        let del = self.c.del_sum(self.ix.extract(self.x.sub(xa, xb)));
        let rows = self.width(xa);
        let cols = self.width(xb);
        let mut m = Matrix::filled(rows, cols, 0i128);
        for t in 0..rows {
            let run = self.run(i, &unit_seed(rows, t), false);
            let yu = la + t;
            for s in 0..cols {
                let yv = lb + s;
                let v = if yu <= yv { run.get(yv - la) } else { (yu - yv) as i128 * LEX + del };
                m.set(t, s, v);
            }
        }
        m
    }

    /// Strips whose graph is a shifted copy of the previous strip's graph
    /// are dropped; the rest start runs of identical strips.
    fn run_starts(&self, fresh: &[bool]) -> Vec<usize> {
        let m = self.b.len() - 1;
        let (d, ny) = (self.d, self.y.len());
        let b = &self.b;
        let mut starts = vec![0];
        let mut anchor: Option<(usize, usize, usize)> = None;
        for j in 1..m {
            let ok = !fresh[j] && b[j - 1] >= d && b[j + 1] + 3 * d <= ny;
            if !ok {
                anchor = None;
                starts.push(j);
                continue;
            }
            let p = b[j] - b[j - 1];
            if anchor.map(|a| a.1) != Some(p) {
                let s0 = b[j - 1] - d;
                let l = self.ix.lcp(self.y.suffix(s0), self.y.suffix(s0 + p));
                anchor = Some((s0, p, l));
            }
            let (s0, p, l) = anchor.unwrap();
            if b[j + 1] + 3 * d - s0 - p > l {
                anchor = None;
                starts.push(j);
            }
        }
        starts
    }

    /// Steps of an optimal path across strips `s..s+t` from row offset `u`
    /// to row offset `v`, splitting at a midpoint of the stored powers.
    fn path_rec(&self, table: &PowerTable<i128>, s: usize, u: usize, v: usize, t: u64, out: &mut Vec<Step>) {
        let len = self.b[s + t as usize] - self.b[s];
        if table.get(t).get(u, v) == 0 {
            out.extend(std::iter::repeat(Step::Diag).take(len));
            return;
        }
        if t == 1 {
            let run = self.run(s, &unit_seed(self.width(self.b[s]), u), true);
            let row = self.lo(self.b[s + 1]) + v - self.lo(self.b[s]);
            let (start, steps) = run.path_to(row);
            debug_assert_eq!(start, u);
            out.extend(steps);
            return;
        }
        let (t1, t2) = (t / 2, t - t / 2);
        let (a, b) = (table.get(t1), table.get(t2));
        let mut best = 0;
        for c in 1..a.cols() {
            if a.get(u, c) + b.get(c, v) < a.get(u, best) + b.get(best, v) {
                best = c;
            }
        }
        self.path_rec(table, s, u, best, t1, out);
        self.path_rec(table, s + t1 as usize, best, v, t2, out);
    }
}

/// Four-way band distances using PILLAR operations on `ix`; `x` and `y` are
/// fragments of strings in `ix`, and witnesses use coordinates relative to
/// them. Requires `selfed(X) <= k` and `|Y| <= |X| + 2d`.
pub fn solve_pillar<P: Pillar>(
    ix: &P,
    x: Fragment,
    y: Fragment,
    w: &WeightFn,
    d: u64,
    k: usize,
) -> Result<FourWayResult, BandError> {
    solve_pillar_cached(ix, x, y, w, d, k, None)
}

/// [`solve_pillar`] reusing a known self-alignment of `X` of cost at most `k`.
pub(crate) fn solve_pillar_cached<P: Pillar>(
    ix: &P,
    x: Fragment,
    y: Fragment,
    w: &WeightFn,
    d: u64,
    k: usize,
    selfal: Option<&Alignment>,
) -> Result<FourWayResult, BandError> {
    let (nx, ny) = (x.len(), y.len());
    if precheck(w, nx, ny, d, k)? {
        return Ok(FourWayResult::infinite());
    }
    let owned;
    let selfal = match selfal {
        Some(a) => a,
        None => {
            owned = selfed_bounded(ix, x, k).alignment.ok_or(BandError::SelfEd(k))?;
            &owned
        }
    };
    let du = d as usize;
    if ed_bounded(ix, x, y, 4 * du).value.is_none() {
        return Ok(FourWayResult::infinite());
    }
    if nx == 0 {
        return Ok(solve_direct(ix.extract(x), ix.extract(y), w, d));
    }
    let dec = decompose_pillar_with(ix, x, k, selfal).map_err(|_| BandError::SelfEd(k))?;
    let st = Strips { ix, x, y, b: dec.boundaries.clone(), d: du, c: costs_for(w, d) };
    let m = dec.len();
    let mut fbar = st.run_starts(&dec.fresh);
    fbar.push(m);

    let (mut fixed, mut free) = column0_seeds(du, ny);
    let mut stored = vec![(fixed.clone(), free.clone())];
    let mut tables: Vec<Option<PowerTable<i128>>> = Vec::new();
    for r in 0..fbar.len() - 1 {
        let (i, j) = (fbar[r], fbar[r + 1]);
        if j == i + 1 {
            fixed = st.run(i, &fixed, false).vals;
            free = st.run(i, &free, false).vals;
            tables.push(None);
        } else {
            let e = (j - i) as u64;
            let table = monge_power_table(&st.matrix(i), e);
            fixed = vec_minplus(&fixed, table.get(e)).expect("band vectors match strip sizes");
            free = vec_minplus(&free, table.get(e)).expect("band vectors match strip sizes");
            tables.push(Some(table));
        }
        stored.push((fixed.clone(), free.clone()));
    }

    let limit = d.saturating_mul(w.denominator());
    let tg = targets(st.lo(nx), &fixed, &free, ny);
    let (xs, ys) = (ix.extract(x), ix.extract(y));
    let mut out = FourWayResult::infinite();
    for (qi, q) in Quantity::ALL.into_iter().enumerate() {
        let (v, mut row) = tg[qi];
        let cost = to_cost(v, limit);
        if cost.is_inf() {
            continue;
        }
        let mut pieces: Vec<Vec<Step>> = Vec::new();
        for r in (0..fbar.len() - 1).rev() {
            let (i, j) = (fbar[r], fbar[r + 1]);
            let vin = if q.free_start() { &stored[r].1 } else { &stored[r].0 };
            let base = st.lo(st.b[i]);
            let mut steps = Vec::new();
            match &tables[r] {
                None => {
                    let run = st.run(i, vin, true);
                    let (u, s) = run.path_to(row - base);
                    steps = s;
                    row = base + u;
                }
                Some(table) => {
                    let e = (j - i) as u64;
                    let p = table.get(e);
                    let vcol = row - st.lo(st.b[j]);
                    let mut u = 0;
                    for t in 1..vin.len() {
                        if vin[t] + p.get(t, vcol) < vin[u] + p.get(u, vcol) {
                            u = t;
                        }
                    }
                    st.path_rec(table, i, u, vcol, e, &mut steps);
                    row = base + u;
                }
            }
            pieces.push(steps);
        }
        let steps: Vec<Step> = pieces.into_iter().rev().flatten().collect();
        *out.get_mut(q) = Witnessed { cost, alignment: Some(build_alignment((0, row), &steps, xs, ys)) };
    }
    Ok(out)
}
