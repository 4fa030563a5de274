use std::collections::HashMap;

use super::boxes::{BoxCtx, Rect};
use super::strip::{strip_dp, unit_seed, Costs, UNREACH};
use super::{
    build_alignment, costs_for, precheck, solve_direct, targets, to_cost, BandError, FourWayResult,
    Quantity, Witnessed,
};
use crate::decompose::decompose_std_with;
use crate::monge::{vec_minplus, Matrix};
use crate::pillar::{Pillar, PlainText};
use crate::selfed::selfed_bounded;
use crate::types::{Step, Sym, WeightFn};

/// Counters from one [`solve_standard`] call.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StandardStats {
    pub phrase_len: usize,
    pub boxes: usize,
    pub classes: usize,
}

/// Phrase length `min(ceil(sqrt(n d) / (k sqrt(ceil(log2 n)))), d)`, at least 1.
pub fn standard_phrase_length(n: usize, d: u64, k: usize) -> usize {
    let n = n.max(2);
    let lg = (usize::BITS - (n - 1).leading_zeros()) as f64;
    let l = ((n as f64 * d as f64).sqrt() / (k.max(1) as f64 * lg.sqrt())).ceil() as usize;
    l.min(d as usize).max(1)
}

struct BoxState {
    class: usize,
    w: usize,
    h: usize,
    input: [Vec<i128>; 2],
    output: [Vec<i128>; 2],
}

struct Grid<'a> {
    x: &'a [Sym],
    y: &'a [Sym],
    xb: Vec<usize>,
    yb: Vec<usize>,
    jlo: Vec<usize>,
    boxes: Vec<Vec<BoxState>>,
    classes: Vec<Matrix<i128>>,
}

impl Grid<'_> {
    fn get(&self, i: usize, j: usize) -> Option<&BoxState> {
        let row = &self.boxes[i];
        if j < self.jlo[i] || j >= self.jlo[i] + row.len() {
            None
        } else {
            Some(&row[j - self.jlo[i]])
        }
    }

    fn source(&self, side: usize, y: usize) -> i128 {
        if side == 1 || y == 0 {
            0
        } else {
            UNREACH
        }
    }

    fn inputs(&self, i: usize, j: usize, w: usize, h: usize, side: usize) -> Vec<i128> {
        let below = if j > 0 { self.get(i, j - 1) } else { None };
        let left = if i > 0 { self.get(i - 1, j) } else { None };
        let mut v = vec![UNREACH; w + h + 1];
        if let Some(b) = below {
            for (t, slot) in v.iter_mut().enumerate().take(w + 1) {
                *slot = b.output[side][b.h + t];
            }
        }
        for s in 0..=h {
            let val = match left {
                Some(l) => l.output[side][s],
                None if i == 0 => self.source(side, self.yb[j] + s),
                None => UNREACH,
            };
            v[w + s] = v[w + s].min(val);
        }
        v
    }

    fn steps_inside(&self, c: &Costs, u: (usize, usize), v: (usize, usize)) -> Vec<Step> {
        if u == v {
            return Vec::new();
        }
        let xs = &self.x[u.0..v.0];
        let ys = &self.y[u.1..v.1];
        let h = v.1 - u.1;
        let run = strip_dp(xs, ys, c, 0, xs.len(), &|_| (0, h), &unit_seed(h + 1, 0), true);
        let (start, steps) = run.path_to(h);
        debug_assert_eq!(start, 0);
        steps
    }

    /// Backtracks from output `s` of box `(i, j)` to a source, returning
    /// the start row and the steps in forward order.
    fn backtrack(&self, c: &Costs, side: usize, mut i: usize, mut j: usize, mut s: usize) -> (usize, Vec<Step>) {
        let mut pieces = Vec::new();
        loop {
            let bx = self.get(i, j).expect("backtrack left the relevant boxes");
            let m = &self.classes[bx.class];
            let inp = &bx.input[side];
            let mut t = 0;
            for c in 1..inp.len() {
                if inp[c] + m.get(c, s) < inp[t] + m.get(t, s) {
                    t = c;
                }
            }
            let r = Rect::new(bx.w, bx.h);
            let (u, v) = (r.input(t), r.output(s));
            let org = (self.xb[i], self.yb[j]);
            let ua = (org.0 + u.0, org.1 + u.1);
            let va = (org.0 + v.0, org.1 + v.1);
            pieces.push(self.steps_inside(c, ua, va));
            let val = inp[t];
            let below = if j > 0 { self.get(i, j - 1) } else { None };
            let left = if i > 0 { self.get(i - 1, j) } else { None };
            if t < bx.w {
                let b = below.expect("bottom input without a box below");
                s = b.h + t;
                j -= 1;
                continue;
            }
            let off = t - bx.w;
            if let Some(l) = left {
                if l.output[side][off] == val {
                    s = off;
                    i -= 1;
                    continue;
                }
            }
            if off == 0 {
                if let Some(b) = below {
                    if b.output[side][b.h + bx.w] == val {
                        s = b.h + bx.w;
                        j -= 1;
                        continue;
                    }
                }
            }
            debug_assert_eq!(i, 0);
            let steps = pieces.into_iter().rev().flatten().collect();
            return (ua.1, steps);
        }
    }
}

/// Four-way band distances in the word RAM, sweeping boxes of phrases.
/// Requires `selfed(X) <= k` and `|Y| <= |X| + 2d`.
pub fn solve_standard(x: &[Sym], y: &[Sym], w: &WeightFn, d: u64, k: usize) -> Result<FourWayResult, BandError> {
    solve_standard_inner(x, y, w, d, k, None, true).map(|r| r.0)
}

/// [`solve_standard`] that also reports phrase and box counts.
pub fn solve_standard_with_stats(
    x: &[Sym],
    y: &[Sym],
    w: &WeightFn,
    d: u64,
    k: usize,
) -> Result<(FourWayResult, StandardStats), BandError> {
    solve_standard_inner(x, y, w, d, k, None, true)
}

/// [`solve_standard_with_stats`] with a chosen phrase length instead of the
/// default from [`standard_phrase_length`].
pub fn solve_standard_phrase(
    x: &[Sym],
    y: &[Sym],
    w: &WeightFn,
    d: u64,
    k: usize,
    l: usize,
) -> Result<(FourWayResult, StandardStats), BandError> {
    solve_standard_inner(x, y, w, d, k, Some(l.max(1)), true)
}

/// For callers that already know `selfed(X) <= k`.
pub(crate) fn solve_standard_trusted(
    x: &[Sym],
    y: &[Sym],
    w: &WeightFn,
    d: u64,
    k: usize,
) -> Result<FourWayResult, BandError> {
    solve_standard_inner(x, y, w, d, k, None, false).map(|r| r.0)
}

fn solve_standard_inner(
    x: &[Sym],
    y: &[Sym],
    w: &WeightFn,
    d: u64,
    k: usize,
    phrase: Option<usize>,
    check_x: bool,
) -> Result<(FourWayResult, StandardStats), BandError> {
    let (nx, ny) = (x.len(), y.len());
    let mut stats = StandardStats::default();
    if precheck(w, nx, ny, d, k)? {
        return Ok((FourWayResult::infinite(), stats));
    }
    let l = phrase.unwrap_or_else(|| standard_phrase_length(nx.max(ny), d, k));
    stats.phrase_len = l;
    let pt = PlainText::new(&[x, y]);
    if l == 1 || nx == 0 || ny == 0 {
        if check_x && selfed_bounded(&pt, pt.whole(0), k).value.is_none() {
            return Err(BandError::SelfEd(k));
        }
        return Ok((solve_direct(x, y, w, d), stats));
    }
    let ax = selfed_bounded(&pt, pt.whole(0), k).alignment.ok_or(BandError::SelfEd(k))?;
    let Some(ay) = selfed_bounded(&pt, pt.whole(1), 10 * k).alignment else {
        return Ok((FourWayResult::infinite(), stats));
    };
    let dx = decompose_std_with(&pt, pt.whole(0), k, l, &ax).map_err(|_| BandError::SelfEd(k))?;
    let dy = decompose_std_with(&pt, pt.whole(1), 10 * k, l, &ay).map_err(|_| BandError::SelfEd(k))?;
    let du = d as usize;
    let c = costs_for(w, d);

    let (xb, yb) = (dx.boundaries, dy.boundaries);
    let (mx, my) = (xb.len() - 1, yb.len() - 1);
    let mut xid = HashMap::new();
    let xcls: Vec<usize> = (0..mx)
        .map(|i| {
            let n = xid.len();
            *xid.entry(&x[xb[i]..xb[i + 1]]).or_insert(n)
        })
        .collect();
    let mut yid = HashMap::new();
    let ycls: Vec<usize> = (0..my)
        .map(|j| {
            let n = yid.len();
            *yid.entry(&y[yb[j]..yb[j + 1]]).or_insert(n)
        })
        .collect();

    let mut grid = Grid { x, y, xb: xb.clone(), yb: yb.clone(), jlo: Vec::new(), boxes: Vec::new(), classes: Vec::new() };
    let mut class_of: HashMap<(usize, usize), usize> = HashMap::new();
    for i in 0..mx {
        let (xa, xe) = (xb[i], xb[i + 1]);
        let jlo = yb[1..].partition_point(|&v| v + du < xa);
        let jend = yb[..my].partition_point(|&v| v <= xe + 3 * du);
        if jlo >= jend {
            return Ok((FourWayResult::infinite(), stats));
        }
        grid.jlo.push(jlo);
        grid.boxes.push(Vec::with_capacity(jend - jlo));
        for j in jlo..jend {
            let (wd, ht) = (xe - xa, yb[j + 1] - yb[j]);
            let key = (xcls[i], ycls[j]);
            let class = match class_of.get(&key) {
                Some(&cl) => cl,
                None => {
                    let m = BoxCtx::new(&x[xa..xe], &y[yb[j]..yb[j + 1]], &c).solve(Rect::new(wd, ht));
                    grid.classes.push(m);
                    class_of.insert(key, grid.classes.len() - 1);
                    grid.classes.len() - 1
                }
            };
            let m = &grid.classes[class];
            let input = [grid.inputs(i, j, wd, ht, 0), grid.inputs(i, j, wd, ht, 1)];
            let output = [
                vec_minplus(&input[0], m).expect("box ports match"),
                vec_minplus(&input[1], m).expect("box ports match"),
            ];
            grid.boxes[i].push(BoxState { class, w: wd, h: ht, input, output });
            stats.boxes += 1;
        }
    }
    stats.classes = grid.classes.len();

    let last = mx - 1;
    let mut fin = [vec![UNREACH; ny + 1], vec![UNREACH; ny + 1]];
    for (jj, bx) in grid.boxes[last].iter().enumerate() {
        let j = grid.jlo[last] + jj;
        for s in 0..=bx.h {
            for side in 0..2 {
                let slot = &mut fin[side][yb[j] + s];
                *slot = (*slot).min(bx.output[side][s]);
            }
        }
    }
    let limit = d.saturating_mul(w.denominator());
    let tg = targets(0, &fin[0], &fin[1], ny);
    let mut out = FourWayResult::infinite();
    for (qi, q) in Quantity::ALL.into_iter().enumerate() {
        let (v, row) = tg[qi];
        let cost = to_cost(v, limit);
        if cost.is_inf() {
            continue;
        }
        let side = q.free_start() as usize;
        let (jj, _) = grid.boxes[last]
            .iter()
            .enumerate()
            .find(|(jj, bx)| {
                let y0 = yb[grid.jlo[last] + jj];
                y0 <= row && row <= y0 + bx.h && bx.output[side][row - y0] == v
            })
            .expect("final value comes from some box");
        let j = grid.jlo[last] + jj;
        let (p, steps) = grid.backtrack(&c, side, last, j, row - yb[j]);
        *out.get_mut(q) = Witnessed { cost, alignment: Some(build_alignment((0, p), &steps, x, y)) };
    }
    Ok((out, stats))
}
