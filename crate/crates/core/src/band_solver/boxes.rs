//! Boundary-to-boundary distances of one box of the alignment graph.
//!
//! Inputs are the bottom row (right to left) followed by the left column
//! (bottom to top); outputs are the right column (bottom to top) followed by
//! the top row (right to left). With this order every matrix is Monge once
//! unreachable pairs carry their back-edge distances.

use super::strip::{Costs, LEX};
use super::BandError;
use crate::monge::{monge_minplus, Matrix};
use crate::types::{Cost, Sym, WeightFn};

/// Largest box side accepted by [`box_boundary_matrix`].
pub const BOX_CAP: usize = 4096;

const INF_WEIGHT: u64 = 1 << 48;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Rect {
    pub(crate) x0: usize,
    pub(crate) x1: usize,
    pub(crate) y0: usize,
    pub(crate) y1: usize,
}

impl Rect {
    pub(crate) fn new(w: usize, h: usize) -> Rect {
        Rect { x0: 0, x1: w, y0: 0, y1: h }
    }

    pub(crate) fn w(&self) -> usize {
        self.x1 - self.x0
    }

    pub(crate) fn h(&self) -> usize {
        self.y1 - self.y0
    }

    pub(crate) fn ports(&self) -> usize {
        self.w() + self.h() + 1
    }

    pub(crate) fn input(&self, t: usize) -> (usize, usize) {
        let w = self.w();
        if t < w {
            (self.x1 - t, self.y0)
        } else {
            (self.x0, self.y0 + t - w)
        }
    }

    pub(crate) fn output(&self, s: usize) -> (usize, usize) {
        let h = self.h();
        if s <= h {
            (self.x1, self.y0 + s)
        } else {
            (self.x1 - (s - h), self.y1)
        }
    }

    fn in_idx(&self, p: (usize, usize)) -> usize {
        if p.1 == self.y0 && p.0 > self.x0 {
            self.x1 - p.0
        } else {
            self.w() + p.1 - self.y0
        }
    }

    fn out_idx(&self, p: (usize, usize)) -> usize {
        if p.0 == self.x1 {
            p.1 - self.y0
        } else {
            self.h() + self.x1 - p.0
        }
    }
}

pub(crate) struct BoxCtx<'a> {
    xs: &'a [Sym],
    ys: &'a [Sym],
    c: &'a Costs,
    dpre: Vec<i128>,
    ipre: Vec<i128>,
}

impl<'a> BoxCtx<'a> {
    pub(crate) fn new(xs: &'a [Sym], ys: &'a [Sym], c: &'a Costs) -> BoxCtx<'a> {
        let mut dpre = vec![0];
        for &a in xs {
            dpre.push(dpre.last().unwrap() + c.del(a));
        }
        let mut ipre = vec![0];
        for &b in ys {
            ipre.push(ipre.last().unwrap() + c.ins(b));
        }
        BoxCtx { xs, ys, c, dpre, ipre }
    }

    /// Back-edge distance for a pair with no forward path, `None` otherwise.
    fn aug(&self, u: (usize, usize), v: (usize, usize)) -> Option<i128> {
        let back_x = u.0 > v.0;
        let back_y = u.1 > v.1;
        match (back_x, back_y) {
            (false, false) => None,
            (true, true) => Some((u.0 - v.0 + u.1 - v.1) as i128 * LEX),
            (true, false) => Some((u.0 - v.0) as i128 * LEX + self.ipre[v.1] - self.ipre[u.1]),
            (false, true) => Some((u.1 - v.1) as i128 * LEX + self.dpre[v.0] - self.dpre[u.0]),
        }
    }

    /// One forward DP per input vertex.
    pub(crate) fn naive(&self, r: Rect) -> Matrix<i128> {
        let (w, h) = (r.w(), r.h());
        let n = r.ports();
        let mut m = Matrix::filled(n, n, 0i128);
        let stride = h + 1;
        let mut dist = vec![0i128; (w + 1) * stride];
        for t in 0..n {
            let u = r.input(t);
            let (ux, uy) = (u.0 - r.x0, u.1 - r.y0);
            for i in ux..=w {
                for j in uy..=h {
                    let mut b = if i == ux && j == uy { 0 } else { i128::MAX / 4 };
                    if i > ux && j > uy {
                        let c = self.c.diag(self.xs[r.x0 + i - 1], self.ys[r.y0 + j - 1]);
                        b = b.min(dist[(i - 1) * stride + j - 1] + c);
                    }
                    if i > ux {
                        b = b.min(dist[(i - 1) * stride + j] + self.c.del(self.xs[r.x0 + i - 1]));
                    }
                    if j > uy {
                        b = b.min(dist[i * stride + j - 1] + self.c.ins(self.ys[r.y0 + j - 1]));
                    }
                    dist[i * stride + j] = b;
                }
            }
            for s in 0..n {
                let v = r.output(s);
                let val = match self.aug(u, v) {
                    Some(a) => a,
                    None => dist[(v.0 - r.x0) * stride + v.1 - r.y0],
                };
                m.set(t, s, val);
            }
        }
        m
    }

    /// Halves the longer side, solves both halves and joins them across the
    /// cut with a Monge min-plus product.
    pub(crate) fn solve(&self, r: Rect) -> Matrix<i128> {
        let (w, h) = (r.w(), r.h());
        if (w <= 4 && h <= 4) || w == 0 || h == 0 {
            return self.naive(r);
        }
        let (a, b, cut): (Rect, Rect, Vec<(usize, usize)>) = if w >= h {
            let xm = r.x0 + w / 2;
            let cut = (0..=h).map(|k| (xm, r.y0 + k)).collect();
            (Rect { x1: xm, ..r }, Rect { x0: xm, ..r }, cut)
        } else {
            let ym = r.y0 + h / 2;
            let cut = (0..=w).map(|k| (r.x1 - k, ym)).collect();
            (Rect { y1: ym, ..r }, Rect { y0: ym, ..r }, cut)
        };
        let vertical = w >= h;
        let in_a = |u: (usize, usize)| if vertical { u.0 <= a.x1 } else { u.1 <= a.y1 };
        let out_b = |v: (usize, usize)| if vertical { v.0 >= b.x0 } else { v.1 >= b.y0 };
        let ma = self.solve(a);
        let mb = self.solve(b);
        let n = r.ports();
        let rows_a: Vec<usize> = (0..n).filter(|&t| in_a(r.input(t))).collect();
        let cols_b: Vec<usize> = (0..n).filter(|&s| out_b(r.output(s))).collect();
        let left = Matrix::from_fn(rows_a.len(), cut.len(), |i, k| {
            ma.get(a.in_idx(r.input(rows_a[i])), a.out_idx(cut[k]))
        });
        let right = Matrix::from_fn(cut.len(), cols_b.len(), |k, j| {
            mb.get(b.in_idx(cut[k]), b.out_idx(r.output(cols_b[j])))
        });
        let across = monge_minplus(&left, &right).expect("cut is never empty");
        let mut pos_a = vec![usize::MAX; n];
        for (i, &t) in rows_a.iter().enumerate() {
            pos_a[t] = i;
        }
        let mut pos_b = vec![usize::MAX; n];
        for (j, &s) in cols_b.iter().enumerate() {
            pos_b[s] = j;
        }
        Matrix::from_fn(n, n, |t, s| {
            let (u, v) = (r.input(t), r.output(s));
            if let Some(x) = self.aug(u, v) {
                return x;
            }
            match (pos_a[t] != usize::MAX, pos_b[s] != usize::MAX) {
                (true, true) => across.get(pos_a[t], pos_b[s]),
                (true, false) => ma.get(a.in_idx(u), a.out_idx(v)),
                (false, true) => mb.get(b.in_idx(u), b.out_idx(v)),
                (false, false) => unreachable!("pair without a forward path"),
            }
        })
    }
}

/// Boundary matrix of the box aligning `xs` with `ys`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryMatrix {
    pub width: usize,
    pub height: usize,
    /// Packed distances; pairs without a forward path hold back-edge
    /// distances at or above `2^64`.
    pub matrix: Matrix<i128>,
}

impl BoundaryMatrix {
    pub fn ports(&self) -> usize {
        self.width + self.height + 1
    }

    pub fn input_point(&self, t: usize) -> (usize, usize) {
        Rect::new(self.width, self.height).input(t)
    }

    pub fn output_point(&self, s: usize) -> (usize, usize) {
        Rect::new(self.width, self.height).output(s)
    }

    /// Forward distance from input `t` to output `s`.
    pub fn distance(&self, t: usize, s: usize) -> Cost {
        let v = self.matrix.get(t, s);
        if v >= INF_WEIGHT as i128 {
            Cost::INF
        } else {
            Cost::new(v as u64)
        }
    }
}

fn check_box(xs: &[Sym], ys: &[Sym]) -> Result<(), BandError> {
    if xs.len() > BOX_CAP || ys.len() > BOX_CAP {
        return Err(BandError::BoxTooLarge { w: xs.len(), h: ys.len(), cap: BOX_CAP });
    }
    Ok(())
}

pub fn box_boundary_matrix(xs: &[Sym], ys: &[Sym], w: &WeightFn) -> Result<BoundaryMatrix, BandError> {
    check_box(xs, ys)?;
    let c = Costs::new(w, INF_WEIGHT);
    let m = BoxCtx::new(xs, ys, &c).solve(Rect::new(xs.len(), ys.len()));
    Ok(BoundaryMatrix { width: xs.len(), height: ys.len(), matrix: m })
}

/// Reference version running one DP per input vertex.
pub fn box_boundary_matrix_naive(
    xs: &[Sym],
    ys: &[Sym],
    w: &WeightFn,
) -> Result<BoundaryMatrix, BandError> {
    check_box(xs, ys)?;
    let c = Costs::new(w, INF_WEIGHT);
    let m = BoxCtx::new(xs, ys, &c).naive(Rect::new(xs.len(), ys.len()));
    Ok(BoundaryMatrix { width: xs.len(), height: ys.len(), matrix: m })
}
