//! Structured hard instances with closed-form distances.
//!
//! Two constructions encode min-plus products as weighted edit distances:
//! a two-matrix gadget ([`gen_two_matrix_gadget`]) and a batched
//! three-matrix gadget ([`gen_three_matrix_gadget`]) whose batch minimum
//! decides whether a tripartite graph has a triangle of weight at most 0.
//! [`combine_batch`] folds a batch into one bounded instance.
//!
//! Matrices are `Vec<Vec<i64>>` in row-major order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::types::{Cost, Sym, WeightFn};

pub type IntMatrix = Vec<Vec<i64>>;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HardError {
    #[error("matrix {0} must be {1}x{2}")]
    Shape(&'static str, usize, usize),
    #[error("matrix {0} has an entry outside [-{1}, {1}]")]
    Range(&'static str, i64),
    #[error("tau = {tau} must lie in [1, {p}]")]
    Tau { tau: usize, p: usize },
    #[error("dimensions must be positive")]
    Empty,
    #[error("edge {0} is missing")]
    MissingEdge(String),
    #[error("batch side conditions violated: {}", .0.join("; "))]
    SideConditions(Vec<String>),
    #[error("numbers too large for 64-bit costs")]
    Overflow,
}

fn check(name: &'static str, m: &IntMatrix, rows: usize, cols: usize, e: i64) -> Result<(), HardError> {
    if m.len() != rows || m.iter().any(|r| r.len() != cols) {
        return Err(HardError::Shape(name, rows, cols));
    }
    if m.iter().flatten().any(|v| v.abs() > e) {
        return Err(HardError::Range(name, e));
    }
    Ok(())
}

fn table(a: usize, den: u64, f: impl Fn(usize, usize) -> u64, ins: impl Fn(usize) -> u64, del: impl Fn(usize) -> u64) -> WeightFn {
    let sub = (0..a * a).map(|t| if t / a == t % a { Cost::ZERO } else { Cost::new(f(t / a, t % a)) }).collect();
    let ins = (0..a).map(|c| Cost::new(ins(c))).collect();
    let del = (0..a).map(|c| Cost::new(del(c))).collect();
    WeightFn::new(a, den, sub, ins, del).expect("well-formed table")
}

fn to_u64(v: i128) -> Result<u64, HardError> {
    u64::try_from(v).map_err(|_| HardError::Overflow)
}

/// Two-matrix gadget: `X_l` for each column `l` of `B` and one string `Y`.
#[derive(Clone, Debug)]
pub struct TwoMatrixGadget {
    pub xs: Vec<Vec<Sym>>,
    pub y: Vec<Sym>,
    pub weights: WeightFn,
    pub d: u64,
    pub f: u64,
    pub a: IntMatrix,
    pub b: IntMatrix,
}

impl TwoMatrixGadget {
    /// Closed-form `wed(X_l[i..|X_l|-i), Y)`.
    pub fn predicted(&self, l: usize, i: usize) -> Cost {
        let (p, q) = (self.a.len(), self.b.len());
        let best = (0..q).map(|j| self.a[i][j] + self.b[j][l]).min().unwrap();
        let v = (self.y.len() as i128) * self.f as i128
            + ((p - i) * (q + 1)) as i128 * self.d as i128
            + best as i128;
        Cost::new(v as u64)
    }
}

/// Builds the two-matrix gadget for `A` (`p×q`) and `B` (`q×r`) with entries in `[-e, e]`.
pub fn gen_two_matrix_gadget(a: &IntMatrix, b: &IntMatrix, e: i64) -> Result<TwoMatrixGadget, HardError> {
    let p = a.len();
    let q = b.len();
    if p == 0 || q == 0 || b[0].is_empty() {
        return Err(HardError::Empty);
    }
    let r = b[0].len();
    check("A", a, p, q, e)?;
    check("B", b, q, r, e)?;
    let (nx, ny) = (2 * p + 1, 2 * p + q);
    let l = (nx + ny + 1) as i128;
    let d = e.max(0) as i128 * l + 1;
    let f = d * l + 1;
    // X symbols: x_0..x_{p-1}, selectors x_p^(l), x_{p+1}..x_{2p}; then Y symbols.
    let sel = |ll: usize| p + ll;
    let xs_hi = |t: usize| p + r + (t - p - 1);
    let ybase = 2 * p + r;
    let alpha = ybase + ny;
    let arow = |i: usize, j: usize| if i < p { a[i][j] as i128 } else { 0 };
    let sub = |s: usize, t: usize| -> u64 {
        let two_f = 2 * f;
        if s >= ybase || t < ybase {
            return two_f as u64;
        }
        let yj = t - ybase;
        let v = if s < p {
            let i = s;
            (yj >= i && yj < i + q).then(|| {
                let j = yj - i;
                f + arow(i, j) - arow(i + 1, j) + (q - j) as i128 * d
            })
        } else if s < p + r {
            let ll = s - p;
            (yj >= p && yj < p + q).then(|| f + b[yj - p][ll] as i128)
        } else {
            let i = s - (p + r) + 1;
            (yj >= p + i && yj < p + i + q).then(|| f + (yj - p - i + 1) as i128 * d)
        };
        v.unwrap_or(two_f) as u64
    };
    let weights = table(alpha, 1, sub, |_| f as u64, |_| f as u64);
    let xs = (0..r)
        .map(|ll| {
            (0..nx)
                .map(|t| match t.cmp(&p) {
                    std::cmp::Ordering::Less => t,
                    std::cmp::Ordering::Equal => sel(ll),
                    std::cmp::Ordering::Greater => xs_hi(t),
                } as Sym)
                .collect()
        })
        .collect();
    let y = (0..ny).map(|t| (ybase + t) as Sym).collect();
    Ok(TwoMatrixGadget { xs, y, weights, d: d as u64, f: f as u64, a: a.clone(), b: b.clone() })
}

/// Parameters of the three-matrix gadget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetParams {
    pub a: IntMatrix,
    pub b: IntMatrix,
    pub c: IntMatrix,
    pub tau: usize,
    pub e: i64,
    /// Insert dummy strings so consecutive strings differ in at most this many positions.
    pub hamming_budget: Option<usize>,
}

/// Scale constants of the three-matrix gadget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Scales {
    pub d: u64,
    pub i: u64,
    pub f: u64,
    pub k: u64,
}

impl GadgetParams {
    pub fn new(a: IntMatrix, b: IntMatrix, c: IntMatrix, tau: usize, e: i64) -> Result<GadgetParams, HardError> {
        let g = GadgetParams { a, b, c, tau, e, hamming_budget: None };
        g.validate()?;
        Ok(g)
    }

    pub fn p(&self) -> usize {
        self.a.len()
    }

    pub fn q(&self) -> usize {
        self.b.len()
    }

    pub fn r(&self) -> usize {
        self.c.len()
    }

    pub fn p_tau(&self) -> usize {
        self.p().div_ceil(self.tau)
    }

    pub fn validate(&self) -> Result<(), HardError> {
        let (p, q) = (self.a.len(), self.b.len());
        if p == 0 || q == 0 || self.c.is_empty() {
            return Err(HardError::Empty);
        }
        let r = self.c.len();
        check("A", &self.a, p, q, self.e)?;
        check("B", &self.b, q, r, self.e)?;
        check("C", &self.c, r, p, self.e)?;
        if self.tau == 0 || self.tau > p {
            return Err(HardError::Tau { tau: self.tau, p });
        }
        self.scales().map(|_| ())
    }

    /// Length of every `X_{l,i}`.
    pub fn x_len(&self) -> usize {
        1 + self.tau * (2 * self.p_tau() + 2)
    }

    /// Padding on each side of the middle block of `Y`.
    fn pad(&self) -> usize {
        (self.tau - 1) * (2 * self.p_tau() + 2) + self.p_tau()
    }

    pub fn y_len(&self) -> usize {
        2 * self.pad() + 2 * self.p_tau() + self.q()
    }

    pub fn scales(&self) -> Result<Scales, HardError> {
        let n = (self.x_len() + self.y_len()) as u128;
        let l = n + 1;
        let d = self.e.max(0) as u128 * l + 1;
        let i = d * l + 1;
        let f = i * l + 1;
        let k = f * n;
        let ok = |v: u128| u64::try_from(v).map_err(|_| HardError::Overflow);
        // Costs reach about 2 |Y| K.
        ok(k * 4 * n)?;
        Ok(Scales { d: ok(d)?, i: ok(i)?, f: ok(f)?, k: ok(k)? })
    }

    /// Row of `A` used at offset `i` of copy `alpha`; rows past the end repeat the last one.
    fn row(&self, alpha: usize, i: usize) -> usize {
        (alpha * self.p_tau() + i).min(self.p() - 1)
    }

    /// `min over alpha, j of A[row][j] + B[j][l] + C[l][row]`.
    pub fn triple_min(&self, l: usize, i: usize) -> i64 {
        (0..self.tau)
            .flat_map(|alpha| {
                let row = self.row(alpha, i);
                (0..self.q()).map(move |j| self.a[row][j] + self.b[j][l] + self.c[l][row])
            })
            .min()
            .unwrap()
    }
}

/// A batch `X_0..X_{m-1}` against one `Y` with a threshold.
#[derive(Clone, Debug)]
pub struct BatchInstance {
    pub weights: WeightFn,
    pub xs: Vec<Vec<Sym>>,
    pub y: Vec<Sym>,
    /// Threshold numerator over `weights.denominator()`.
    pub k: u64,
    /// `(l, i)` of each string; `None` marks a dummy.
    pub labels: Vec<Option<(usize, usize)>>,
}

/// Symbol layout of the three-matrix gadget.
struct Layout {
    pt: usize,
    q: usize,
    r: usize,
    tau: usize,
    pad: usize,
}

impl Layout {
    fn copy_size(&self) -> usize {
        2 * self.pt + self.r
    }
    /// `x_t` of copy `alpha` with `t != pt`.
    fn x(&self, alpha: usize, t: usize) -> usize {
        let base = alpha * self.copy_size();
        if t < self.pt {
            base + t
        } else {
            base + self.r + t - 1
        }
    }
    fn sel(&self, alpha: usize, l: usize) -> usize {
        alpha * self.copy_size() + self.pt + l
    }
    fn d0(&self, l: usize, i: usize) -> usize {
        self.tau * self.copy_size() + l * self.pt + i
    }
    fn mid(&self, a: usize) -> usize {
        self.tau * self.copy_size() + self.r * self.pt + a - 1
    }
    fn dt(&self, i: usize) -> usize {
        self.tau * self.copy_size() + self.r * self.pt + self.tau - 1 + i
    }
    fn y_start(&self) -> usize {
        self.dt(self.pt)
    }
    /// Symbol of `Y` at offset `t` from the start of the middle block (may be negative).
    fn y(&self, t: i64) -> usize {
        (self.y_start() as i64 + self.pad as i64 + t) as usize
    }
    fn y_len(&self) -> usize {
        2 * self.pad + 2 * self.pt + self.q
    }
    fn x_alphabet(&self) -> usize {
        self.y_start()
    }
    fn alphabet(&self) -> usize {
        self.y_start() + self.y_len()
    }
}

/// Builds the batch `X_{l,i}` (ordered by `l`, then `i`), `Y` and normalized weights.
pub fn gen_three_matrix_gadget(params: &GadgetParams) -> Result<BatchInstance, HardError> {
    params.validate()?;
    let sc = params.scales()?;
    let (q, r, tau, pt) = (params.q(), params.r(), params.tau, params.p_tau());
    let lay = Layout { pt, q, r, tau, pad: params.pad() };
    let (d, ii, f, kk) = (sc.d as i128, sc.i as i128, sc.f as i128, sc.k as i128);
    let block = 2 * pt + 2;
    let mid_len = 2 * pt + q;
    let nxa = lay.x_alphabet();
    let base_alpha = lay.alphabet();
    let hash = params.hamming_budget.map(|_| base_alpha);
    let alpha_size = base_alpha + usize::from(hash.is_some());

    // Raw integer cost of substituting X symbol s by Y symbol t.
    let mut raw = vec![2 * f; nxa * lay.y_len()];
    let set = |raw: &mut Vec<i128>, s: usize, t: usize, v: i128| raw[s * lay.y_len() + (t - lay.y_start())] = v;
    let is_mid = |t: usize| {
        let o = t - lay.y_start();
        o >= lay.pad && o < lay.pad + mid_len
    };
    let dollar_syms: Vec<usize> = (0..r).flat_map(|l| (0..pt).map(move |i| (l, i))).map(|(l, i)| lay.d0(l, i)).chain((0..pt).map(|i| lay.dt(i))).collect();
    for s in 0..nxa {
        if dollar_syms.contains(&s) {
            continue;
        }
        for t in lay.y_start()..lay.alphabet() {
            if !is_mid(t) {
                set(&mut raw, s, t, f);
            }
        }
    }
    let arow = |alpha: usize, i: usize, j: usize| if i < pt { params.a[params.row(alpha, i)][j] as i128 } else { 0 };
    for alpha in 0..tau {
        for i in 0..pt {
            for j in 0..q {
                let v = f + arow(alpha, i, j) - arow(alpha, i + 1, j) + (q - j) as i128 * d;
                set(&mut raw, lay.x(alpha, i), lay.y((i + j) as i64), v);
            }
        }
        for l in 0..r {
            for j in 0..q {
                set(&mut raw, lay.sel(alpha, l), lay.y((pt + j) as i64), f + params.b[j][l] as i128);
            }
        }
        for i in 1..=pt {
            for j in 0..q {
                set(&mut raw, lay.x(alpha, pt + i), lay.y((pt + i + j) as i64), f + (j + 1) as i128 * d);
            }
        }
        for i in 0..pt {
            let c0 = -((alpha * block + i + 1) as i64);
            let rest = (alpha + 1) as i128 * ii + (i * (q + 1)) as i128 * d;
            for l in 0..r {
                let c = params.c[l][params.row(alpha, i)] as i128;
                set(&mut raw, lay.d0(l, i), lay.y(c0), f + c + rest);
            }
            let ct = (mid_len + (tau - alpha - 1) * block + i) as i64;
            set(&mut raw, lay.dt(i), lay.y(ct), f + (tau - alpha) as i128 * ii);
        }
    }
    let is_x = |s: usize| s < nxa;
    let unit = kk as u64;
    let sub = |s: usize, t: usize| -> u64 {
        if Some(s) == hash || Some(t) == hash {
            return 2 * unit;
        }
        match (is_x(s), is_x(t)) {
            (true, true) => unit,
            (false, false) => 2 * unit,
            (true, false) => unit + raw[s * lay.y_len() + (t - lay.y_start())] as u64,
            (false, true) => unit + raw[t * lay.y_len() + (s - lay.y_start())] as u64,
        }
    };
    let indel = |s: usize| if is_x(s) || Some(s) == hash { unit } else { 2 * unit };
    let weights = table(alpha_size, unit, sub, indel, indel);

    let xlen = params.x_len();
    let string = |l: usize, i: usize| -> Vec<Sym> {
        let mut s = Vec::with_capacity(xlen);
        s.push(lay.d0(l, i));
        for alpha in 0..tau {
            if alpha > 0 {
                s.push(lay.mid(alpha));
            }
            for t in 0..=2 * pt {
                s.push(if t == pt { lay.sel(alpha, l) } else { lay.x(alpha, t) });
            }
        }
        s.push(lay.dt(i));
        s.into_iter().map(|c| c as Sym).collect()
    };
    let mut xs: Vec<Vec<Sym>> = Vec::new();
    let mut labels = Vec::new();
    for l in 0..r {
        for i in 0..pt {
            let next = string(l, i);
            if let (Some(budget), Some(prev)) = (params.hamming_budget, xs.last()) {
                if i == 0 {
                    for dummy in dummies(prev, &next, hash.unwrap() as Sym, budget.max(1)) {
                        xs.push(dummy);
                        labels.push(None);
                    }
                }
            }
            xs.push(next);
            labels.push(Some((l, i)));
        }
    }
    let y = (0..lay.y_len()).map(|t| (lay.y_start() + t) as Sym).collect();
    let ylen = lay.y_len() as u128;
    let lnum = xlen as u128 * sc.f as u128 + (tau as u128 + 1) * sc.i as u128 + (pt * (q + 1)) as u128 * sc.d as u128;
    let k = to_u64(((2 * ylen - xlen as u128) * sc.k as u128 + lnum) as i128)?;
    Ok(BatchInstance { weights, xs, y, k, labels })
}

/// Intermediate strings on the way from `from` to `to`: both ends become
/// `hash`, the differing middle positions are copied over one at a time,
/// then both ends take their final values. A string is emitted whenever
/// one more change would put it more than `budget` positions away from the
/// last emitted string.
fn dummies(from: &[Sym], to: &[Sym], hash: Sym, budget: usize) -> Vec<Vec<Sym>> {
    let n = from.len();
    let mut updates: Vec<(usize, Sym)> = vec![(0, hash), (n - 1, hash)];
    updates.extend((1..n - 1).filter(|&t| from[t] != to[t]).map(|t| (t, to[t])));
    updates.push((0, to[0]));
    updates.push((n - 1, to[n - 1]));
    let mut cur = from.to_vec();
    let mut last = from.to_vec();
    let mut out = Vec::new();
    for (pos, c) in updates {
        let mut next = cur.clone();
        next[pos] = c;
        if hamming(&next, &last) > budget {
            out.push(cur.clone());
            last = cur;
        }
        cur = next;
    }
    debug_assert_eq!(cur, to);
    out
}

/// Closed-form `wed(X_{l,i}, Y)` under the normalized gadget weights, as a
/// numerator over the gadget's denominator `K`.
pub fn predicted_distance(params: &GadgetParams, l: usize, i: usize) -> Cost {
    let sc = params.scales().expect("valid parameters");
    let (x, y) = (params.x_len() as i128, params.y_len() as i128);
    let v = x * sc.f as i128
        + (params.tau as i128 + 1) * sc.i as i128
        + (params.p_tau() * (params.q() + 1)) as i128 * sc.d as i128
        + params.triple_min(l, i) as i128
        + (2 * y - x) * sc.k as i128;
    Cost::new(v as u64)
}

/// A single bounded instance equivalent to a batch.
#[derive(Clone, Debug)]
pub struct CombinedInstance {
    pub x: Vec<Sym>,
    pub y: Vec<Sym>,
    pub weights: WeightFn,
    /// Threshold numerator over `weights.denominator()`.
    pub k: u64,
    /// Largest Hamming distance between consecutive batch strings.
    pub h: usize,
    pub m: usize,
    /// Length of the separators `U` and `V`.
    pub sep_len: usize,
    pub bot: Sym,
    pub diamond: Sym,
}

/// Checks the conditions `combine_batch` relies on; returns one message per violation.
pub fn batch_violations(batch: &BatchInstance) -> Vec<String> {
    let mut out = Vec::new();
    let w = &batch.weights;
    let den = w.denominator();
    let a = w.alphabet_size();
    if batch.xs.is_empty() {
        out.push("empty batch".to_string());
        return out;
    }
    let x = batch.xs[0].len();
    if batch.xs.iter().any(|s| s.len() != x) {
        out.push("batch strings differ in length".to_string());
    }
    let y = batch.y.len();
    if x > y {
        out.push(format!("|X| = {x} exceeds |Y| = {y}"));
    }
    let mut in_x = vec![false; a];
    let mut in_y = vec![false; a];
    for &c in batch.xs.iter().flatten() {
        if (c as usize) < a {
            in_x[c as usize] = true;
        } else {
            out.push(format!("symbol {c} outside the alphabet"));
            return out;
        }
    }
    for &c in &batch.y {
        if (c as usize) < a {
            in_y[c as usize] = true;
        } else {
            out.push(format!("symbol {c} outside the alphabet"));
            return out;
        }
    }
    if (0..a).any(|c| in_x[c] && in_y[c]) {
        out.push("X and Y alphabets overlap".to_string());
    }
    if !w.is_symmetric() {
        out.push("weights are not symmetric".to_string());
    }
    let in_range = |c: Cost| c.num().is_some_and(|v| v >= den && v <= 2 * den);
    let mut bad_range = false;
    for s in 0..a as Sym {
        for t in 0..a as Sym {
            if s != t && !in_range(w.sub(s, t)) {
                bad_range = true;
            }
        }
        if !in_range(w.ins(s)) || !in_range(w.del(s)) {
            bad_range = true;
        }
    }
    if bad_range {
        out.push("weights outside [1, 2]".to_string());
    }
    for c in 0..a {
        let (ins, del) = (w.ins(c as Sym), w.del(c as Sym));
        if in_x[c] && (ins != Cost::new(den) || del != Cost::new(den)) {
            out.push(format!("X symbol {c} does not have indel weight 1"));
        }
        if in_y[c] && (ins != Cost::new(2 * den) || del != Cost::new(2 * den)) {
            out.push(format!("Y symbol {c} does not have indel weight 2"));
        }
    }
    let lo = (2 * y as u64).saturating_sub(x as u64) * den;
    if 2 * y < x || batch.k < lo || batch.k >= lo + den {
        out.push("threshold outside [2|Y| - |X|, 2|Y| - |X| + 1)".to_string());
    }
    out
}

fn hamming(a: &[Sym], b: &[Sym]) -> usize {
    a.iter().zip(b).filter(|(s, t)| s != t).count()
}

/// Folds a batch into one pair of strings with `min_i wed(X_i, Y) <= k`
/// iff `wed(X, Y) <= k`.
pub fn combine_batch(batch: &BatchInstance) -> Result<CombinedInstance, HardError> {
    let v = batch_violations(batch);
    if !v.is_empty() {
        return Err(HardError::SideConditions(v));
    }
    let xs = &batch.xs;
    let m = xs.len();
    let x = xs[0].len();
    let y = batch.y.len();
    let h = xs.windows(2).map(|p| hamming(&p[0], &p[1])).max().unwrap_or(0);
    let sep = (m - 1) * (h + 4) + x + 2 * y + 1;
    let w = &batch.weights;
    let a0 = w.alphabet_size();
    let (u0, v0) = (a0, a0 + sep);
    let bot = (a0 + 2 * sep) as Sym;
    let diamond = bot + 1;
    let a = a0 + 2 * sep + 2;
    let den = w.denominator();
    let sub = |s: usize, t: usize| if s < a0 && t < a0 { w.sub(s as Sym, t as Sym).num().unwrap() } else { den };
    let ins = |c: usize| if c < a0 { w.ins(c as Sym).num().unwrap() } else { den };
    let del = |c: usize| if c < a0 { w.del(c as Sym).num().unwrap() } else { den };
    let weights = table(a, den, sub, ins, del);

    let blot = |s: &[Sym], forced: &[usize]| -> Vec<Sym> {
        let mut out = s.to_vec();
        let mut left = h;
        for &t in forced {
            out[t] = bot;
            left -= 1;
        }
        for c in out.iter_mut() {
            if left == 0 {
                break;
            }
            if *c != bot {
                *c = bot;
                left -= 1;
            }
        }
        out
    };
    // bots[i] for i in 0..=m, following the 1-indexed convention of the construction.
    let mut bots = vec![blot(&xs[0], &[])];
    for i in 1..m {
        let forced: Vec<usize> = (0..x).filter(|&t| xs[i - 1][t] != xs[i][t]).collect();
        bots.push(blot(&xs[i - 1], &forced));
    }
    bots.push(blot(&xs[m - 1], &[]));
    let u: Vec<Sym> = (u0..u0 + sep).map(|c| c as Sym).collect();
    let vv: Vec<Sym> = (v0..v0 + sep).map(|c| c as Sym).collect();

    let mut hx = vec![diamond];
    hx.extend(&xs[0]);
    hx.push(diamond);
    for xi in &xs[1..] {
        hx.extend(&u);
        hx.extend(&batch.y);
        hx.extend(&vv);
        hx.push(diamond);
        hx.extend(xi);
        hx.push(diamond);
    }
    let mut hy = bots[0].clone();
    for b in &bots[1..] {
        hy.extend(&u);
        hy.push(diamond);
        hy.extend(&batch.y);
        hy.push(diamond);
        hy.extend(&vv);
        hy.extend(b);
    }
    let k = ((m - 1) * (h + 4) + 2 * sep + 2 * x) as u64 * den + batch.k;
    Ok(CombinedInstance { x: hx, y: hy, weights, k, h, m, sep_len: sep, bot, diamond })
}

/// Complete tripartite graph on parts of sizes `p`, `q`, `r`; `None` marks a missing edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TripartiteGraph {
    pub pq: Vec<Vec<Option<i64>>>,
    pub qr: Vec<Vec<Option<i64>>>,
    pub rp: Vec<Vec<Option<i64>>>,
}

/// `A[i][j] = w(P_i, Q_j)`, `B[j][l] = w(Q_j, R_l)`, `C[l][i] = w(R_l, P_i)`.
pub fn triangle_to_matrices(g: &TripartiteGraph) -> Result<(IntMatrix, IntMatrix, IntMatrix), HardError> {
    fn take(m: &[Vec<Option<i64>>], name: &str) -> Result<IntMatrix, HardError> {
        m.iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, v)| v.ok_or_else(|| HardError::MissingEdge(format!("{name}[{i}][{j}]"))))
                    .collect()
            })
            .collect()
    }
    let (a, b, c) = (take(&g.pq, "PQ")?, take(&g.qr, "QR")?, take(&g.rp, "RP")?);
    let (p, q) = (a.len(), b.len());
    let r = c.len();
    if p == 0 || q == 0 || r == 0 {
        return Err(HardError::Empty);
    }
    let big = i64::MAX;
    check("A", &a, p, q, big)?;
    check("B", &b, q, r, big)?;
    check("C", &c, r, p, big)?;
    Ok((a, b, c))
}

/// Minimum of `A[i][j] + B[j][l] + C[l][i]` by enumeration.
pub fn min_triangle(a: &IntMatrix, b: &IntMatrix, c: &IntMatrix) -> i64 {
    let mut best = i64::MAX;
    for (i, row) in a.iter().enumerate() {
        for (j, &aij) in row.iter().enumerate() {
            for (l, &bjl) in b[j].iter().enumerate() {
                best = best.min(aij + bjl + c[l][i]);
            }
        }
    }
    best
}

/// Random matrix with entries in `[-e, e]`.
pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize, e: i64) -> IntMatrix {
    (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(-e..=e)).collect()).collect()
}

/// Random normalized weights over `alphabet` symbols with denominator in
/// `1..=max_den`; finite entries lie in `[den, 3 den]` and each entry is
/// infinite with probability `inf_rate`.
pub fn random_weights(rng: &mut impl Rng, alphabet: usize, max_den: u64, inf_rate: f64) -> WeightFn {
    let den = rng.gen_range(1..=max_den.max(1));
    let entry = |rng: &mut dyn rand::RngCore| {
        if rng.gen_bool(inf_rate) {
            Cost::INF
        } else {
            Cost::new(rng.gen_range(den..=3 * den))
        }
    };
    let a = alphabet.max(1);
    let sub = (0..a * a).map(|t| if t / a == t % a { Cost::ZERO } else { entry(rng) }).collect();
    let ins = (0..a).map(|_| entry(rng)).collect();
    let del = (0..a).map(|_| entry(rng)).collect();
    WeightFn::new(a, den, sub, ins, del).expect("well-formed table")
}

/// Length-`n` text over `0..alphabet`: uniform, or (half the time when
/// `max_period > 0`) a random period repeated with a few point mutations.
pub fn random_text(rng: &mut impl Rng, n: usize, alphabet: usize, max_period: usize) -> Vec<Sym> {
    let a = alphabet.max(1) as Sym;
    if max_period == 0 || rng.gen_bool(0.5) {
        return (0..n).map(|_| rng.gen_range(0..a)).collect();
    }
    let period: Vec<Sym> = (0..rng.gen_range(1..=max_period)).map(|_| rng.gen_range(0..a)).collect();
    let mut x: Vec<Sym> = (0..n).map(|i| period[i % period.len()]).collect();
    for _ in 0..rng.gen_range(0..=3) {
        if n > 0 {
            let p = rng.gen_range(0..n);
            x[p] = rng.gen_range(0..a);
        }
    }
    x
}

/// Applies `edits` random edits of finite weight to `x`.
pub fn random_edits(rng: &mut impl Rng, x: &[Sym], edits: usize, w: &WeightFn) -> Vec<Sym> {
    let a = w.alphabet_size() as Sym;
    let mut y = x.to_vec();
    let mut done = 0;
    let mut tries = 0;
    while done < edits && tries < 100 * (edits + 1) {
        tries += 1;
        let c = rng.gen_range(0..a);
        match rng.gen_range(0..3) {
            0 if !y.is_empty() => {
                let p = rng.gen_range(0..y.len());
                if c != y[p] && w.sub(y[p], c).is_finite() {
                    y[p] = c;
                    done += 1;
                }
            }
            1 if w.ins(c).is_finite() => {
                let p = rng.gen_range(0..=y.len());
                y.insert(p, c);
                done += 1;
            }
            2 if !y.is_empty() => {
                let p = rng.gen_range(0..y.len());
                if w.del(y[p]).is_finite() {
                    y.remove(p);
                    done += 1;
                }
            }
            _ => {}
        }
    }
    y
}

/// Uniform random text over `0..alphabet` and a copy with `edits` planted edits.
pub fn planted_instance(n: usize, alphabet: usize, edits: usize, w: &WeightFn, seed: u64) -> (Vec<Sym>, Vec<Sym>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = alphabet.clamp(1, w.alphabet_size()) as Sym;
    let x: Vec<Sym> = (0..n).map(|_| rng.gen_range(0..a)).collect();
    let y = random_edits(&mut rng, &x, edits, w);
    (x, y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::wed_quadratic;

    #[test]
    fn smallest_two_matrix_gadget() {
        let g = gen_two_matrix_gadget(&vec![vec![0]], &vec![vec![0]], 0).unwrap();
        assert_eq!(g.xs[0].len(), 3);
        assert_eq!(g.y.len(), 3);
        assert_eq!(wed_quadratic(&g.xs[0], &g.y, &g.weights).cost, g.predicted(0, 0));
    }

    #[test]
    fn zero_matrices_predict_offset_only() {
        let z = |r, c| vec![vec![0i64; c]; r];
        let g = GadgetParams::new(z(2, 2), z(2, 1), z(1, 2), 1, 1).unwrap();
        let b = gen_three_matrix_gadget(&g).unwrap();
        assert_eq!(wed_quadratic(&b.xs[0], &b.y, &b.weights).cost, predicted_distance(&g, 0, 0));
        assert!(b.weights.is_normalized() && b.weights.is_symmetric());
    }

    #[test]
    fn dummy_strings_keep_hamming_budget() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let g = GadgetParams {
            hamming_budget: Some(2),
            ..GadgetParams::new(random_matrix(&mut rng, 4, 2, 2), random_matrix(&mut rng, 2, 3, 2), random_matrix(&mut rng, 3, 4, 2), 2, 2).unwrap()
        };
        let b = gen_three_matrix_gadget(&g).unwrap();
        assert!(b.labels.iter().any(|l| l.is_none()));
        for p in b.xs.windows(2) {
            assert!(hamming(&p[0], &p[1]) <= 2);
        }
    }
}
