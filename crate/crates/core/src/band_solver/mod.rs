//! The four relaxed distances of `X` against `Y` for a self-similar `X`:
//! full, suffix-free (free start in `Y`), prefix-free (free end) and
//! substring (both free), each reported only when at most `d`.
//!
//! Only the diagonals `y - x` in `[-d, 3d]` can carry an alignment of cost at
//! most `d` when `|Y| <= |X| + 2d`, so both solvers work inside that band.
//! [`solve_pillar`] cuts `X` into phrases, notices runs of identical column
//! strips and raises one strip matrix to a min-plus power per run.
//! [`solve_standard`] cuts both strings into short phrases and sweeps the
//! grid of boxes they induce, sharing one boundary matrix between boxes
//! with identical contents.
//!
//! Internally distances are lexicographic pairs. The high part counts
//! back-edges, which only unreachable pairs need; this keeps every matrix
//! Monge without special cases for unreachable entries.

mod boxes;
mod pillar_variant;
mod standard;
mod strip;

use thiserror::Error;

use crate::types::{Alignment, Cost, Step, Sym, WeightFn};

pub use boxes::{box_boundary_matrix, box_boundary_matrix_naive, BoundaryMatrix, BOX_CAP};
pub use pillar_variant::solve_pillar;
pub(crate) use pillar_variant::solve_pillar_cached;
pub use standard::{solve_standard, solve_standard_phrase, solve_standard_with_stats, standard_phrase_length, StandardStats};

#[allow(unused_imports)]
pub(crate) use standard::solve_standard_trusted;
use strip::{strip_dp, Costs, LEX, UNREACH};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BandError {
    #[error("self edit distance of X exceeds {0}")]
    SelfEd(usize),
    #[error("k must be at least 1")]
    BadK,
    #[error("|Y| = {ny} exceeds |X| + 2d = {nx} + 2*{d}")]
    Length { nx: usize, ny: usize, d: u64 },
    #[error("weight function is not normalized")]
    NotNormalized,
    #[error("box of {w}x{h} exceeds the cap {cap}")]
    BoxTooLarge { w: usize, h: usize, cap: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quantity {
    Full,
    SuffixFree,
    PrefixFree,
    Substring,
}

impl Quantity {
    pub const ALL: [Quantity; 4] =
        [Quantity::Full, Quantity::SuffixFree, Quantity::PrefixFree, Quantity::Substring];

    /// Whether the alignment may start anywhere in `Y`.
    pub fn free_start(self) -> bool {
        matches!(self, Quantity::SuffixFree | Quantity::Substring)
    }

    /// Whether the alignment may end anywhere in `Y`.
    pub fn free_end(self) -> bool {
        matches!(self, Quantity::PrefixFree | Quantity::Substring)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witnessed {
    pub cost: Cost,
    /// Alignment of `X` with `Y[p..q)`, in coordinates of `X` and `Y`.
    pub alignment: Option<Alignment>,
}

impl Witnessed {
    fn none() -> Witnessed {
        Witnessed { cost: Cost::INF, alignment: None }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FourWayResult {
    pub full: Witnessed,
    pub suffix_free: Witnessed,
    pub prefix_free: Witnessed,
    pub substring: Witnessed,
}

impl FourWayResult {
    pub fn infinite() -> FourWayResult {
        FourWayResult {
            full: Witnessed::none(),
            suffix_free: Witnessed::none(),
            prefix_free: Witnessed::none(),
            substring: Witnessed::none(),
        }
    }

    pub fn get(&self, q: Quantity) -> &Witnessed {
        match q {
            Quantity::Full => &self.full,
            Quantity::SuffixFree => &self.suffix_free,
            Quantity::PrefixFree => &self.prefix_free,
            Quantity::Substring => &self.substring,
        }
    }

    fn get_mut(&mut self, q: Quantity) -> &mut Witnessed {
        match q {
            Quantity::Full => &mut self.full,
            Quantity::SuffixFree => &mut self.suffix_free,
            Quantity::PrefixFree => &mut self.prefix_free,
            Quantity::Substring => &mut self.substring,
        }
    }

    /// `[full, suffix_free, prefix_free, substring]`.
    pub fn costs(&self) -> [Cost; 4] {
        Quantity::ALL.map(|q| self.get(q).cost)
    }
}

/// Shared argument checks. `Ok(true)` means every quantity exceeds `d`.
fn precheck(w: &WeightFn, nx: usize, ny: usize, d: u64, k: usize) -> Result<bool, BandError> {
    if k < 1 {
        return Err(BandError::BadK);
    }
    if !w.is_normalized() {
        return Err(BandError::NotNormalized);
    }
    if ny as u64 > nx as u64 + 2 * d {
        return Err(BandError::Length { nx, ny, d });
    }
    Ok((ny as u64) + d < nx as u64)
}

/// Rows of column `x` inside the band `[-d, 3d]`.
fn band_window(d: usize, ny: usize) -> impl Fn(usize) -> (usize, usize) {
    move |x| (x.saturating_sub(d), ny.min(x + 3 * d))
}

fn costs_for(w: &WeightFn, d: u64) -> Costs {
    Costs::new(w, (d + 1).saturating_mul(w.denominator()))
}

fn to_cost(v: i128, limit: u64) -> Cost {
    if v < 0 || v >= LEX || v as u64 > limit {
        Cost::INF
    } else {
        Cost::new(v as u64)
    }
}

/// Last-column rows of each quantity: the value and the row it ends on.
fn targets(lo: usize, fixed: &[i128], free: &[i128], ny: usize) -> [(i128, usize); 4] {
    let at = |v: &[i128]| {
        if ny >= lo && ny < lo + v.len() {
            (v[ny - lo], ny)
        } else {
            (UNREACH, ny)
        }
    };
    let best = |v: &[i128]| {
        let mut b = 0;
        for (t, &c) in v.iter().enumerate() {
            if c < v[b] {
                b = t;
            }
        }
        (v[b], lo + b)
    };
    [at(fixed), at(free), best(fixed), best(free)]
}

fn column0_seeds(d: usize, ny: usize) -> (Vec<i128>, Vec<i128>) {
    let len = ny.min(3 * d) + 1;
    let mut fixed = vec![UNREACH; len];
    fixed[0] = 0;
    (fixed, vec![0; len])
}

fn build_alignment(start: (usize, usize), steps: &[Step], x: &[Sym], y: &[Sym]) -> Alignment {
    Alignment::from_steps_canonical(start, steps, x, y)
}

/// Plain band DP over all of `X`; the phrase length one case of both
/// solvers reduces to this.
fn solve_direct(x: &[Sym], y: &[Sym], w: &WeightFn, d: u64) -> FourWayResult {
    let (nx, ny) = (x.len(), y.len());
    if (ny as u64) + d < nx as u64 {
        return FourWayResult::infinite();
    }
    let c = costs_for(w, d);
    let limit = d.saturating_mul(w.denominator());
    let win = band_window(d as usize, ny);
    let (fixed0, free0) = column0_seeds(d as usize, ny);
    let fixed = strip_dp(x, y, &c, 0, nx, &win, &fixed0, true);
    let free = strip_dp(x, y, &c, 0, nx, &win, &free0, true);
    let tg = targets(fixed.lo, &fixed.vals, &free.vals, ny);
    let mut out = FourWayResult::infinite();
    for (qi, q) in Quantity::ALL.into_iter().enumerate() {
        let (v, row) = tg[qi];
        let cost = to_cost(v, limit);
        if cost.is_inf() {
            continue;
        }
        let run = if q.free_start() { &free } else { &fixed };
        let (p, steps) = run.path_to(row);
        *out.get_mut(q) = Witnessed { cost, alignment: Some(build_alignment((0, p), &steps, x, y)) };
    }
    out
}
