mod bench;
mod input;
mod run;
mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use wedit::decompose::{decompose_pillar, decompose_std, DecomposeError};
use wedit::hardgen::{combine_batch, gen_three_matrix_gadget, min_triangle, random_matrix, GadgetParams};
use wedit::pillar::{build_index, Pillar};
use wedit::selfed::selfed_bounded;

use input::{check_symbols, format_string, read_string, read_weights};
use run::{Algo, Outcome};

#[derive(Parser)]
#[command(name = "wedit", version, about = "Bounded weighted edit distance")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Weighted edit distance of two strings.
    Dist {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        y: PathBuf,
        #[arg(long)]
        weights: PathBuf,
        /// Threshold; costs above it are reported as INF.
        #[arg(long)]
        k: Option<u64>,
        #[arg(long, value_enum, default_value_t = Algo::Main)]
        algo: Algo,
        /// Include a CIGAR of an optimal alignment.
        #[arg(long)]
        alignment: bool,
    },
    /// Self edit distance (unit costs).
    Selfed {
        #[arg(long)]
        x: PathBuf,
        /// Search bound; defaults to 2|X|.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        alignment: bool,
    },
    /// Phrase decomposition as JSON.
    Decompose {
        #[arg(long)]
        x: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Kind::Pillar)]
        kind: Kind,
        /// Phrase length for the standard decomposition; defaults to ceil(sqrt(n)).
        #[arg(long)]
        l: Option<usize>,
    },
    /// Hard batched instance from random matrices.
    GenHard {
        #[arg(long, default_value_t = 3)]
        p: usize,
        #[arg(long, default_value_t = 3)]
        q: usize,
        #[arg(long, default_value_t = 2)]
        r: usize,
        #[arg(long, default_value_t = 1)]
        tau: usize,
        /// Matrix entries lie in [-e, e].
        #[arg(long, default_value_t = 2)]
        e: i64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Insert dummy strings so consecutive batch strings differ in at most this many positions.
        #[arg(long)]
        hamming_budget: Option<usize>,
        /// Emit the single combined pair instead of the batch.
        #[arg(long)]
        combined: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Differential checks against the reference oracles.
    Verify {
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 64)]
        max_n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        /// Perturb the main algorithm's answers to exercise the failure path.
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
    /// Timing table on planted-edit instances, as CSV.
    Bench {
        /// Comma-separated lengths; `2^18` is accepted.
        #[arg(long)]
        n: String,
        #[arg(long)]
        k: String,
        #[arg(long, default_value = "main")]
        algo: String,
        #[arg(long, default_value_t = 1)]
        reps: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Planted edits per instance; defaults to max(1, k/4).
        #[arg(long)]
        edits: Option<usize>,
        #[arg(long, default_value_t = 4)]
        alphabet: usize,
        /// Weight file; defaults to random weights drawn from the seed.
        #[arg(long)]
        weights: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Pillar,
    Std,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.cmd) {
        Ok(Outcome::Finite) => ExitCode::from(0),
        Ok(Outcome::Exceeds) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cmd: Cmd) -> Result<Outcome> {
    match cmd {
        Cmd::Dist { x, y, weights, k, algo, alignment } => {
            let w = read_weights(&weights)?;
            let (x, y) = (read_string(&x)?, read_string(&y)?);
            check_symbols(&x, &w, "X")?;
            check_symbols(&y, &w, "Y")?;
            let report = run::dist(&x, &y, &w, k, algo, alignment)?;
            println!("{}", report.to_json());
            Ok(report.outcome())
        }
        Cmd::Selfed { x, k, alignment } => {
            let x = read_string(&x)?;
            let k = k.unwrap_or(2 * x.len());
            let ix = build_index(&[&x])?;
            let r = selfed_bounded(&ix, ix.whole(0), k);
            let mut out = json!({ "n": x.len(), "k": k, "selfed": r.value });
            if alignment {
                out["cigar"] = json!(r.alignment.map(|a| a.cigar(&x, &x)));
            }
            println!("{out}");
            Ok(if r.value.is_some() { Outcome::Finite } else { Outcome::Exceeds })
        }
        Cmd::Decompose { x, k, kind, l } => {
            let x = read_string(&x)?;
            let ix = build_index(&[&x])?;
            let n = x.len();
            let l = l.unwrap_or((n as f64).sqrt().ceil().max(1.0) as usize);
            let res = match kind {
                Kind::Pillar => decompose_pillar(&ix, ix.whole(0), k),
                Kind::Std => decompose_std(&ix, ix.whole(0), k, l),
            };
            let dec = match res {
                Ok(d) => d,
                Err(DecomposeError::SelfEdExceeded(k)) => {
                    println!("{}", json!({ "n": n, "k": k, "error": "self edit distance exceeds k" }));
                    return Ok(Outcome::Exceeds);
                }
                Err(e) => bail!(e),
            };
            let out = json!({
                "kind": match kind { Kind::Pillar => "pillar", Kind::Std => "std" },
                "n": n,
                "k": k,
                "l": matches!(kind, Kind::Std).then_some(l),
                "phrases": dec.len(),
                "boundaries": dec.boundaries,
                "fresh": dec.fresh,
                "sources": dec.sources,
                "lo": dec.lo,
                "hi": dec.hi,
            });
            println!("{out}");
            Ok(Outcome::Finite)
        }
        Cmd::GenHard { p, q, r, tau, e, seed, hamming_budget, combined, out } => {
            gen_hard(p, q, r, tau, e, seed, hamming_budget, combined, &out)?;
            Ok(Outcome::Finite)
        }
        Cmd::Verify { cases, max_n, seed, suite, inject_fault } => {
            if cases == 0 {
                bail!("--cases must be at least 1");
            }
            let ok = verify::run(cases, max_n, seed, suite, inject_fault);
            Ok(if ok { Outcome::Finite } else { Outcome::Exceeds })
        }
        Cmd::Bench { n, k, algo, reps, seed, edits, alphabet, weights } => {
            let ns = input::parse_list(&n)?;
            let ks = input::parse_list(&k)?;
            let algos = algo
                .split(',')
                .map(|a| Algo::from_str(a.trim(), true).map_err(anyhow::Error::msg))
                .collect::<Result<Vec<_>>>()?;
            let w = weights.map(|p| read_weights(&p)).transpose()?;
            bench::run(&ns, &ks, &algos, reps.max(1), seed, edits, alphabet, w)?;
            Ok(Outcome::Finite)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn gen_hard(
    p: usize,
    q: usize,
    r: usize,
    tau: usize,
    e: i64,
    seed: u64,
    hamming_budget: Option<usize>,
    combined: bool,
    out: &PathBuf,
) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_matrix(&mut rng, p, q, e);
    let b = random_matrix(&mut rng, q, r, e);
    let c = random_matrix(&mut rng, r, p, e);
    let triangle = min_triangle(&a, &b, &c);
    let params = GadgetParams { hamming_budget, ..GadgetParams::new(a, b, c, tau, e)? };
    let batch = gen_three_matrix_gadget(&params)?;
    fs::create_dir_all(out).with_context(|| format!("creating {}", out.display()))?;
    let write = |name: &str, text: String| {
        let path = out.join(name);
        fs::write(&path, text).with_context(|| format!("writing {}", path.display()))
    };
    if combined {
        let comb = combine_batch(&batch)?;
        let den = comb.weights.denominator();
        write("X.txt", format_string(&comb.x))?;
        write("Y.txt", format_string(&comb.y))?;
        write("weights.json", comb.weights.to_json())?;
        write("k", format!("{}/{}\n", comb.k, den))?;
        println!(
            "{}",
            json!({ "combined": true, "x_len": comb.x.len(), "y_len": comb.y.len(), "k_num": comb.k, "k_den": den, "min_triangle": triangle })
        );
    } else {
        let den = batch.weights.denominator();
        fs::create_dir_all(out.join("batch"))?;
        for (t, x) in batch.xs.iter().enumerate() {
            write(&format!("batch/{t:04}.txt"), format_string(x))?;
        }
        write("Y.txt", format_string(&batch.y))?;
        write("weights.json", batch.weights.to_json())?;
        write("k", format!("{}/{}\n", batch.k, den))?;
        println!(
            "{}",
            json!({ "combined": false, "batch": batch.xs.len(), "x_len": params.x_len(), "y_len": batch.y.len(), "k_num": batch.k, "k_den": den, "min_triangle": triangle })
        );
    }
    Ok(())
}
