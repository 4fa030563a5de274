use std::time::Instant;

use anyhow::{bail, Result};
use clap::ValueEnum;
use serde_json::{json, Value};
use wedit::dac::{wed_auto, weighted_ed, Engine, SolverConfig};
use wedit::oracle::{wed_banded_full, wed_quadratic};
use wedit::{Alignment, Cost, Sym, WeightFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    /// Full quadratic DP.
    Quad,
    /// Banded DP of width k.
    Band,
    /// Divide and conquer, engine picked by size.
    Main,
    /// Divide and conquer on the PILLAR engine.
    Pillar,
}

impl Algo {
    pub fn name(self) -> &'static str {
        match self {
            Algo::Quad => "quad",
            Algo::Band => "band",
            Algo::Main => "main",
            Algo::Pillar => "pillar",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Finite,
    Exceeds,
}

pub struct RunReport {
    pub algo: Algo,
    pub n: usize,
    pub m: usize,
    pub k: Option<u64>,
    pub cost: Cost,
    pub den: u64,
    pub seconds: f64,
    pub pillar_ops: u64,
    pub depth: usize,
    pub cigar: Option<String>,
}

impl RunReport {
    pub fn outcome(&self) -> Outcome {
        if self.cost.is_finite() {
            Outcome::Finite
        } else {
            Outcome::Exceeds
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "algo": self.algo.name(),
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "cost": self.cost.num().map(|c| format!("{c}/{}", self.den)),
            "cost_num": self.cost.num(),
            "cost_den": self.den,
            "seconds": self.seconds,
            "pillar_ops": self.pillar_ops,
            "depth": self.depth,
        });
        if let Some(c) = &self.cigar {
            v["cigar"] = json!(c);
        }
        v
    }
}

fn engine(algo: Algo) -> Engine {
    if algo == Algo::Pillar {
        Engine::Pillar
    } else {
        Engine::Auto
    }
}

/// Computes `wed(X, Y)` (capped at `k` if given) with the chosen algorithm.
pub fn dist(x: &[Sym], y: &[Sym], w: &WeightFn, k: Option<u64>, algo: Algo, want_alignment: bool) -> Result<RunReport> {
    if algo != Algo::Quad && !w.is_normalized() {
        bail!("weights are not normalized; only --algo quad accepts them");
    }
    let den = w.denominator();
    let start = Instant::now();
    let (mut cost, alignment, pillar_ops, depth): (Cost, Option<Alignment>, u64, usize) = match algo {
        Algo::Quad => {
            let r = wed_quadratic(x, y, w);
            (r.cost, r.alignment, 0, 0)
        }
        Algo::Band => {
            let Some(k) = k else { bail!("--algo band needs --k") };
            let r = wed_banded_full(x, y, w, k, want_alignment)?;
            (r.cost, r.alignment, 0, 0)
        }
        Algo::Main | Algo::Pillar => {
            let cfg = SolverConfig { engine: engine(algo), witness: want_alignment, ..SolverConfig::default() };
            let r = match k {
                Some(k) => weighted_ed(x, y, k, w, &cfg),
                None if algo == Algo::Pillar => pillar_doubling(x, y, w, &cfg),
                None => wed_auto(x, y, w, &cfg),
            };
            (r.cost, r.alignment, r.stats.pillar_ops, r.stats.depth)
        }
    };
    let seconds = start.elapsed().as_secs_f64();
    if let (Some(k), Some(c)) = (k, cost.num()) {
        if c > k.saturating_mul(den) {
            cost = Cost::INF;
        }
    }
    let cigar = if want_alignment && cost.is_finite() { alignment.map(|a| a.cigar(x, y)) } else { None };
    Ok(RunReport { algo, n: x.len(), m: y.len(), k, cost, den, seconds, pillar_ops, depth, cigar })
}

fn pillar_doubling(x: &[Sym], y: &[Sym], w: &WeightFn, cfg: &SolverConfig) -> wedit::dac::WedResult {
    let bound = ((x.len() + y.len()) as u64).saturating_mul(w.max_finite()).div_ceil(w.denominator()).max(1);
    let mut k = 1;
    let mut ops = 0;
    loop {
        let mut r = weighted_ed(x, y, k, w, cfg);
        ops += r.stats.pillar_ops;
        if r.cost.is_finite() || k >= bound {
            r.stats.pillar_ops = ops;
            return r;
        }
        k = k.saturating_mul(2).min(bound);
    }
}
