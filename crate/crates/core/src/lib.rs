//! Bounded weighted edit distance.
//!
//! The entry points are [`dac::weighted_ed`] (decide and compute
//! `wed(X, Y)` when it is at most `k`) and [`dac::wed_auto`] (exact distance
//! by threshold doubling). Everything else is the machinery behind them plus
//! reference oracles and a generator of structured hard instances.

pub mod band_solver;
pub mod dac;
pub mod decompose;
pub mod hardgen;
pub mod monge;
pub mod oracle;
pub mod pillar;
pub mod selfed;
pub mod types;

pub use types::{
    alignment_cost, normalize_check, Alignment, AlignmentError, Band, Cost, NormReport, Step, Sym,
    WeightFn,
};
