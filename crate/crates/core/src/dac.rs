//! Divide and conquer for bounded weighted edit distance.
//!
//! [`weighted_ed`] first tries a narrow banded DP. If that fails it splits `X`
//! in half and looks for a matching cut in `Y` by solving a small band
//! problem around the middle of `X`, doubling the band width until the cut
//! is found, and recurses on both halves. [`wed_auto`] wraps it with a
//! doubling threshold.

use crate::band_solver::{solve_pillar_cached, solve_standard_trusted, Quantity};
use crate::oracle::wed_banded_full;
use crate::pillar::{Fragment, Pillar, PillarCounts, PillarIndex, PlainText};
use crate::selfed::{selfed_bounded, selfed_prefix_reach, Direction};
use crate::types::{Alignment, Cost, Step, Sym, WeightFn};

/// Which band solver the splits use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Engine {
    /// PILLAR operations over a suffix-array index.
    Pillar,
    /// Plain scans and the box-sweep band solver.
    Standard,
    /// Index-based when `n` exceeds the cube of the split band threshold.
    Auto,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Budget factor for the self edit distance around the split point.
    pub selfed_factor: usize,
    pub engine: Engine,
    /// Build a witness alignment.
    pub witness: bool,
}

impl Default for SolverConfig {
    fn default() -> SolverConfig {
        SolverConfig { selfed_factor: 11, engine: Engine::Auto, witness: true }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DacStats {
    /// Deepest recursion level reached (the root is level 0).
    pub depth: usize,
    pub nodes: usize,
    pub base_cases: usize,
    pub splits: usize,
    pub split_failures: usize,
    /// PILLAR operations spent, when the index engine ran.
    pub pillar_ops: u64,
    /// Threshold of the last run.
    pub k: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WedResult {
    pub cost: Cost,
    pub alignment: Option<Alignment>,
    pub stats: DacStats,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitOutcome {
    Fail,
    /// `X = X[0..x_cut) X[x_cut..)`, `Y = Y[0..y_cut) Y[y_cut..)`.
    Cut { x_cut: usize, y_cut: usize },
}

/// Per-node data that does not depend on the band width.
struct Window {
    l1: usize,
    l2: usize,
    selfal: Option<Alignment>,
}

struct Ctx<'a, P: Pillar> {
    p: &'a P,
    x: &'a [Sym],
    y: &'a [Sym],
    w: &'a WeightFn,
    k: u64,
    factor: usize,
    pillar_band: bool,
    stats: DacStats,
    steps: Option<Vec<Step>>,
}

impl<P: Pillar> Ctx<'_, P> {
    fn xf(&self, a: usize, b: usize) -> Fragment {
        Fragment::new(0, a, b)
    }

    fn yf(&self, a: usize, b: usize) -> Fragment {
        Fragment::new(1, a, b)
    }

    fn limit(&self) -> u64 {
        self.k.saturating_mul(self.w.denominator())
    }

    fn push(&mut self, steps: impl IntoIterator<Item = Step>) {
        if let Some(s) = self.steps.as_mut() {
            s.extend(steps);
        }
    }

    fn window(&self, xa: usize, xb: usize) -> Window {
        let nx = xb - xa;
        let m = nx / 2;
        let budget = self.factor * self.k as usize;
        let back = selfed_prefix_reach(self.p, self.xf(xa, xa + m), budget, Direction::Backward);
        let fwd = selfed_prefix_reach(self.p, self.xf(xa + m, xb), budget, Direction::Forward);
        let (l1, l2) = (m - back, m + fwd);
        let selfal = if self.pillar_band {
            selfed_bounded(self.p, self.xf(xa + l1, xa + l2), 2 * budget).alignment
        } else {
            None
        };
        Window { l1, l2, selfal }
    }

    fn split(&mut self, xa: usize, xb: usize, ya: usize, yb: usize, d: u64, win: &Window) -> SplitOutcome {
        let (nx, ny) = (xb - xa, yb - ya);
        let m = nx / 2;
        let (l1, l2) = (win.l1, win.l2);
        let du = d as usize;
        let ys = l1.saturating_sub(du);
        let (q, ye) = match (l1 == 0, l2 == nx) {
            (true, true) => (Quantity::Full, ny),
            (false, true) => (Quantity::SuffixFree, ny),
            (true, false) => (Quantity::PrefixFree, ny.min(l2 + du)),
            (false, false) => (Quantity::Substring, ny.min(l2 + du)),
        };
        let ys = if q.free_start() { ys } else { 0 };
        let xlen = l2 - l1;
        if ye < ys || (ye - ys) as u64 > xlen as u64 + 2 * d {
            return SplitOutcome::Fail;
        }
        let kk = 2 * self.factor * self.k as usize;
        let res = if self.pillar_band {
            let Some(selfal) = win.selfal.as_ref() else {
                return SplitOutcome::Fail;
            };
            solve_pillar_cached(self.p, self.xf(xa + l1, xa + l2), self.yf(ya + ys, ya + ye), self.w, d, kk, Some(selfal))
        } else {
            solve_standard_trusted(&self.x[xa + l1..xa + l2], &self.y[ya + ys..ya + ye], self.w, d, kk)
        };
        let Ok(res) = res else {
            return SplitOutcome::Fail;
        };
        let Some(a) = res.get(q).alignment.as_ref() else {
            return SplitOutcome::Fail;
        };
        let mp = a.y_at(m - l1).expect("alignment spans X*");
        SplitOutcome::Cut { x_cut: xa + m, y_cut: ya + ys + mp }
    }

    /// Closed form when one side is empty.
    fn trivial(&mut self, xa: usize, xb: usize, ya: usize, yb: usize) -> Option<u64> {
        let mut total = Cost::ZERO;
        for &c in &self.x[xa..xb] {
            total = total + self.w.del(c);
        }
        for &c in &self.y[ya..yb] {
            total = total + self.w.ins(c);
        }
        let v = total.num().filter(|&v| v <= self.limit())?;
        self.push(std::iter::repeat(Step::Del).take(xb - xa));
        self.push(std::iter::repeat(Step::Ins).take(yb - ya));
        Some(v)
    }

    fn base(&mut self, xa: usize, xb: usize, ya: usize, yb: usize, d: u64) -> Option<u64> {
        let trace = self.steps.is_some();
        let r = wed_banded_full(&self.x[xa..xb], &self.y[ya..yb], self.w, d, trace).ok()?;
        let v = r.cost.num()?;
        if let Some(a) = r.alignment {
            self.push(a.steps());
        }
        Some(v)
    }

    fn solve(&mut self, xa: usize, xb: usize, ya: usize, yb: usize, depth: usize) -> Option<u64> {
        self.stats.nodes += 1;
        self.stats.depth = self.stats.depth.max(depth);
        let (nx, ny) = (xb - xa, yb - ya);
        if nx.abs_diff(ny) as u64 > self.k {
            return None;
        }
        if nx == 0 || ny == 0 {
            return self.trivial(xa, xb, ya, yb);
        }
        if nx == ny && self.p.lcp(self.xf(xa, xb), self.yf(ya, yb)) == nx {
            self.push(std::iter::repeat(Step::Diag).take(nx));
            return Some(0);
        }
        let n = nx.max(ny) as u64;
        let mut d = (2 * self.k * self.k).div_ceil(n).min(self.k);
        if nx <= 1 {
            d = self.k;
        }
        self.stats.base_cases += 1;
        if let Some(v) = self.base(xa, xb, ya, yb, d) {
            return Some(v);
        }
        if d >= self.k {
            return None;
        }
        let win = self.window(xa, xb);
        let cut = loop {
            match self.split(xa, xb, ya, yb, d, &win) {
                SplitOutcome::Cut { y_cut, .. } => break y_cut,
                SplitOutcome::Fail => {
                    self.stats.split_failures += 1;
                    if d >= self.k {
                        return None;
                    }
                    d = (2 * d).min(self.k);
                }
            }
        };
        self.stats.splits += 1;
        let xm = xa + nx / 2;
        let c1 = self.solve(xa, xm, ya, cut, depth + 1)?;
        let c2 = self.solve(xm, xb, cut, yb, depth + 1)?;
        Some(c1 + c2).filter(|&v| v <= self.limit())
    }
}

/// `Auto` compares `n` with the cube of the band threshold the splits
/// actually use, `2 * factor * k`.
fn use_index(cfg: &SolverConfig, n: usize, k: u64) -> bool {
    match cfg.engine {
        Engine::Pillar => true,
        Engine::Standard => false,
        Engine::Auto => (n as u128) > (2 * cfg.selfed_factor.max(1) as u128 * k as u128).pow(3),
    }
}

fn run<P: Pillar>(p: &P, x: &[Sym], y: &[Sym], k: u64, w: &WeightFn, cfg: &SolverConfig, pillar_band: bool) -> WedResult {
    let mut ctx = Ctx {
        p,
        x,
        y,
        w,
        k,
        factor: cfg.selfed_factor.max(1),
        pillar_band,
        stats: DacStats { k, ..DacStats::default() },
        steps: cfg.witness.then(Vec::new),
    };
    let v = if k == 0 {
        (x.len() == y.len() && p.lcp(ctx.xf(0, x.len()), ctx.yf(0, y.len())) == x.len()).then(|| {
            ctx.push(std::iter::repeat(Step::Diag).take(x.len()));
            0
        })
    } else {
        ctx.solve(0, x.len(), 0, y.len(), 0)
    };
    let alignment = match (v, ctx.steps.take()) {
        (Some(_), Some(steps)) => Some(Alignment::from_steps_canonical((0, 0), &steps, x, y)),
        _ => None,
    };
    WedResult { cost: v.map_or(Cost::INF, Cost::new), alignment, stats: ctx.stats }
}

/// `wed(X, Y)` if it is at most `k`, else infinity. Requires normalized
/// weights; otherwise the answer is infinity.
pub fn weighted_ed(x: &[Sym], y: &[Sym], k: u64, w: &WeightFn, cfg: &SolverConfig) -> WedResult {
    if !w.is_normalized() {
        return WedResult { cost: Cost::INF, alignment: None, stats: DacStats::default() };
    }
    if use_index(cfg, x.len().max(y.len()), k) {
        let ix = PillarIndex::build(&[x, y]).expect("two strings");
        let mut r = run(&ix, x, y, k, w, cfg, true);
        r.stats.pillar_ops = ix.stats().total();
        r
    } else {
        let pt = PlainText::new(&[x, y]);
        run(&pt, x, y, k, w, cfg, false)
    }
}

/// Runs [`weighted_ed`] with the index engine and reports its operation counts.
pub fn weighted_ed_counted(x: &[Sym], y: &[Sym], k: u64, w: &WeightFn, cfg: &SolverConfig) -> (WedResult, PillarCounts) {
    let ix = PillarIndex::build(&[x, y]).expect("two strings");
    ix.reset_stats();
    let mut r = run(&ix, x, y, k, w, cfg, true);
    let counts = ix.stats();
    r.stats.pillar_ops = counts.total();
    (r, counts)
}

/// Exact `wed(X, Y)`: an index-engine run at a small threshold, then
/// plain runs with a doubling threshold.
pub fn wed_auto(x: &[Sym], y: &[Sym], w: &WeightFn, cfg: &SolverConfig) -> WedResult {
    let n = x.len().max(y.len());
    let lg = (n.max(2) as f64).log2();
    let k0 = ((n as f64 / (lg * lg)).cbrt().ceil() as u64).max(1);
    let den = w.denominator();
    let bound = ((x.len() + y.len()) as u64).saturating_mul(w.max_finite()).div_ceil(den).max(1);
    let first = SolverConfig { engine: Engine::Pillar, ..cfg.clone() };
    let mut r = weighted_ed(x, y, k0, w, &first);
    let mut k = k0;
    let rest = SolverConfig { engine: Engine::Standard, ..cfg.clone() };
    while r.cost.is_inf() && k < bound {
        k = k.saturating_mul(2).min(bound);
        r = weighted_ed(x, y, k, w, &rest);
    }
    r
}

/// `wed(X, Y)` if at most `k`, else infinity, with default settings.
pub fn wed_leq_k(x: &[Sym], y: &[Sym], w: &WeightFn, k: u64) -> Cost {
    let cfg = SolverConfig { witness: false, ..SolverConfig::default() };
    weighted_ed(x, y, k, w, &cfg).cost
}

/// Exact `wed(X, Y)` with default settings.
pub fn wed_exact(x: &[Sym], y: &[Sym], w: &WeightFn) -> Cost {
    let cfg = SolverConfig { witness: false, ..SolverConfig::default() };
    wed_auto(x, y, w, &cfg).cost
}

/// One split attempt on whole strings.
pub fn split(x: &[Sym], y: &[Sym], d: u64, k: u64, w: &WeightFn, cfg: &SolverConfig) -> SplitOutcome {
    if x.is_empty() || k == 0 {
        return SplitOutcome::Fail;
    }
    if use_index(cfg, x.len().max(y.len()), k) {
        let ix = PillarIndex::build(&[x, y]).expect("two strings");
        split_with(&ix, x, y, d, k, w, cfg, true)
    } else {
        let pt = PlainText::new(&[x, y]);
        split_with(&pt, x, y, d, k, w, cfg, false)
    }
}

#[allow(clippy::too_many_arguments)]
fn split_with<P: Pillar>(p: &P, x: &[Sym], y: &[Sym], d: u64, k: u64, w: &WeightFn, cfg: &SolverConfig, pillar_band: bool) -> SplitOutcome {
    let mut ctx = Ctx {
        p,
        x,
        y,
        w,
        k,
        factor: cfg.selfed_factor.max(1),
        pillar_band,
        stats: DacStats::default(),
        steps: None,
    };
    let win = ctx.window(0, x.len());
    ctx.split(0, x.len(), 0, y.len(), d.min(k), &win)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::wed_quadratic;

    fn s(text: &str) -> Vec<Sym> {
        text.bytes().map(|b| b as Sym).collect()
    }

    #[test]
    fn kitten_sitting() {
        let w = WeightFn::unit(256);
        let (a, b) = (s("kitten"), s("sitting"));
        for engine in [Engine::Pillar, Engine::Standard] {
            let cfg = SolverConfig { engine, ..SolverConfig::default() };
            assert_eq!(wed_auto(&a, &b, &w, &cfg).cost, Cost::new(3));
            assert_eq!(weighted_ed(&a, &b, 2, &w, &cfg).cost, Cost::INF);
            let r = weighted_ed(&a, &b, 3, &w, &cfg);
            assert_eq!(r.alignment.unwrap().cost(&a, &b, &w).unwrap(), Cost::new(3));
        }
    }

    #[test]
    fn empty_and_equal() {
        let w = WeightFn::unit(256);
        let y = s("abc");
        assert_eq!(wed_exact(&[], &y, &w), Cost::new(3));
        assert_eq!(wed_leq_k(&y, &y, &w, 0), Cost::ZERO);
        assert_eq!(wed_quadratic(&y, &y, &w).cost, Cost::ZERO);
    }

    #[test]
    fn split_of_identical_strings_is_diagonal() {
        let w = WeightFn::unit(256);
        let x = s("abracadabra-abracadabra");
        for engine in [Engine::Pillar, Engine::Standard] {
            let cfg = SolverConfig { engine, ..SolverConfig::default() };
            let m = x.len() / 2;
            assert_eq!(split(&x, &x, 2, 2, &w, &cfg), SplitOutcome::Cut { x_cut: m, y_cut: m });
        }
    }
}
