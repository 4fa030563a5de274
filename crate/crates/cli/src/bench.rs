use anyhow::Result;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use wedit::hardgen::{planted_instance, random_weights};
use wedit::WeightFn;

use crate::run::{dist, Algo};

pub const HEADER: &str = "algo,n,k,cost_num,cost_den,seconds,pillar_ops,depth";

/// Prints one CSV row per (n, k, algo, rep) on a planted-edit instance with
/// at most `k` edits.
#[allow(clippy::too_many_arguments)]
pub fn run(
    ns: &[u64],
    ks: &[u64],
    algos: &[Algo],
    reps: usize,
    seed: u64,
    edits: Option<usize>,
    alphabet: usize,
    weights: Option<WeightFn>,
) -> Result<()> {
    let w = match weights {
        Some(w) => w,
        None => random_weights(&mut ChaCha8Rng::seed_from_u64(seed), alphabet.max(1), 4, 0.0),
    };
    println!("{HEADER}");
    for &n in ns {
        for &k in ks {
            let e = edits.unwrap_or((k / 4).max(1) as usize).min(k as usize);
            let (x, y) = planted_instance(n as usize, alphabet, e, &w, seed ^ n.rotate_left(17) ^ k);
            for &algo in algos {
                for _ in 0..reps {
                    let r = dist(&x, &y, &w, Some(k), algo, false)?;
                    let num = r.cost.num().map_or("inf".to_string(), |c| c.to_string());
                    println!(
                        "{},{},{},{},{},{:.6},{},{}",
                        algo.name(),
                        n,
                        k,
                        num,
                        r.den,
                        r.seconds,
                        r.pillar_ops,
                        r.depth
                    );
                }
            }
        }
    }
    Ok(())
}
