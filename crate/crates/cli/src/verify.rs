use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;
use wedit::band_solver::{solve_pillar, solve_standard};
use wedit::dac::{weighted_ed, Engine, SolverConfig};
use wedit::hardgen::{
    combine_batch, gen_three_matrix_gadget, predicted_distance, random_edits, random_matrix, random_text,
    random_weights, GadgetParams,
};
use wedit::oracle::{four_way_brute, selfed_brute, wed_banded, wed_quadratic};
use wedit::pillar::{build_index, Pillar};
use wedit::types::format_symbols;
use wedit::{Cost, Sym, WeightFn};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Core,
    Hardgen,
    All,
}

/// Runs the chosen suites; prints one summary line per suite and a repro
/// dump for the first mismatch. Returns whether everything agreed.
pub fn run(cases: usize, max_n: usize, seed: u64, suite: Suite, inject_fault: bool) -> bool {
    let mut ok = true;
    if matches!(suite, Suite::Core | Suite::All) {
        ok &= report("dac", dac_suite(cases, max_n, seed, inject_fault));
        ok &= report("band", band_suite(cases, max_n.min(96), seed));
    }
    if matches!(suite, Suite::Hardgen | Suite::All) {
        ok &= report("hardgen", hardgen_suite(cases, seed));
    }
    ok
}

fn report(name: &str, r: Result<usize, serde_json::Value>) -> bool {
    match r {
        Ok(n) => {
            println!("{}", json!({ "suite": name, "cases": n, "status": "pass" }));
            true
        }
        Err(repro) => {
            println!("{}", json!({ "suite": name, "status": "fail", "repro": repro }));
            false
        }
    }
}

struct Pair {
    w: WeightFn,
    x: Vec<Sym>,
    y: Vec<Sym>,
}

fn random_pair(rng: &mut ChaCha8Rng, max_n: usize) -> Pair {
    let a = rng.gen_range(1..=4);
    let w = random_weights(rng, a, 8, 0.1);
    let n = rng.gen_range(0..=max_n);
    let x = random_text(rng, n, w.alphabet_size(), 6);
    let e = rng.gen_range(0..=8);
    let y = random_edits(rng, &x, e, &w);
    Pair { w, x, y }
}

/// Greedily drops symbols from `x` and `y` while `bad` still holds.
fn minimize(x: &[Sym], y: &[Sym], bad: impl Fn(&[Sym], &[Sym]) -> bool) -> (Vec<Sym>, Vec<Sym>) {
    let (mut x, mut y) = (x.to_vec(), y.to_vec());
    loop {
        let mut shrunk = false;
        for side in 0..2 {
            let mut i = 0;
            while i < if side == 0 { x.len() } else { y.len() } {
                let (mut cx, mut cy) = (x.clone(), y.clone());
                if side == 0 {
                    cx.remove(i);
                } else {
                    cy.remove(i);
                }
                if bad(&cx, &cy) {
                    (x, y) = (cx, cy);
                    shrunk = true;
                } else {
                    i += 1;
                }
            }
        }
        if !shrunk {
            return (x, y);
        }
    }
}

fn dac_suite(cases: usize, max_n: usize, seed: u64, inject_fault: bool) -> Result<usize, serde_json::Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..cases {
        let Pair { w, x, y } = random_pair(&mut rng, max_n);
        let k = rng.gen_range(0..=(x.len() as u64 + 2));
        for engine in [Engine::Pillar, Engine::Standard] {
            let cfg = SolverConfig { engine, ..SolverConfig::default() };
            let main = |x: &[Sym], y: &[Sym]| {
                let r = weighted_ed(x, y, k, &w, &cfg);
                let c = r.cost;
                if inject_fault && c.num().is_some_and(|v| v > 0) {
                    return (Cost::new(c.raw() - 1), r.alignment);
                }
                (c, r.alignment)
            };
            let expect = |x: &[Sym], y: &[Sym]| wed_banded(x, y, &w, k).expect("normalized weights");
            let bad = |x: &[Sym], y: &[Sym]| {
                let (got, al) = main(x, y);
                got != expect(x, y) || al.is_some_and(|a| a.cost(x, y, &w).ok() != Some(got))
            };
            if bad(&x, &y) {
                let (mx, my) = minimize(&x, &y, bad);
                return Err(json!({
                    "case": case,
                    "engine": format!("{engine:?}"),
                    "k": k,
                    "weights": serde_json::from_str::<serde_json::Value>(&w.to_json()).unwrap_or_default(),
                    "x": format_symbols(&mx),
                    "y": format_symbols(&my),
                    "expected": expect(&mx, &my).to_string(),
                    "got": main(&mx, &my).0.to_string(),
                }));
            }
        }
        let q = wed_quadratic(&x, &y, &w).cost;
        let b = wed_banded(&x, &y, &w, k).expect("normalized weights");
        let capped = if q.num().is_some_and(|v| v <= k * w.denominator()) { q } else { Cost::INF };
        if b != capped {
            return Err(json!({ "case": case, "check": "banded vs quadratic", "x": format_symbols(&x), "y": format_symbols(&y) }));
        }
    }
    Ok(cases)
}

fn band_suite(cases: usize, max_n: usize, seed: u64) -> Result<usize, serde_json::Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
    for case in 0..cases {
        let Pair { w, x, mut y } = random_pair(&mut rng, max_n);
        let cut = rng.gen_range(0..=2).min(y.len());
        y.drain(..cut);
        let d = rng.gen_range(0..=8u64).max(y.len().saturating_sub(x.len()).div_ceil(2) as u64);
        let k = selfed_brute(&x).max(1) + rng.gen_range(0..4);
        let brute = four_way_brute(&x, &y, &w, d);
        let ix = build_index(&[&x, &y]).expect("index");
        let p = solve_pillar(&ix, ix.whole(0), ix.whole(1), &w, d, k).map(|r| r.costs());
        let s = solve_standard(&x, &y, &w, d, k).map(|r| r.costs());
        if p.as_ref().ok() != Some(&brute) || s.as_ref().ok() != Some(&brute) {
            return Err(json!({
                "case": case,
                "d": d,
                "k": k,
                "weights": serde_json::from_str::<serde_json::Value>(&w.to_json()).unwrap_or_default(),
                "x": format_symbols(&x),
                "y": format_symbols(&y),
                "brute": brute.map(|c| c.to_string()),
                "pillar": format!("{p:?}"),
                "standard": format!("{s:?}"),
            }));
        }
    }
    Ok(cases)
}

fn hardgen_suite(cases: usize, seed: u64) -> Result<usize, serde_json::Value> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x51_7cc1_b727_220a);
    for case in 0..cases {
        let (p, q, r) = (rng.gen_range(1..=3), rng.gen_range(1..=3), rng.gen_range(1..=2));
        let tau = rng.gen_range(1..=p);
        let e = rng.gen_range(0..=2);
        let a = random_matrix(&mut rng, p, q, e);
        let b = random_matrix(&mut rng, q, r, e);
        let c = random_matrix(&mut rng, r, p, e);
        let dump = |what: &str| json!({ "case": case, "check": what, "a": a, "b": b, "c": c, "tau": tau, "e": e });
        let params = match GadgetParams::new(a.clone(), b.clone(), c.clone(), tau, e) {
            Ok(g) => g,
            Err(err) => return Err(dump(&err.to_string())),
        };
        let batch = gen_three_matrix_gadget(&params).map_err(|err| dump(&err.to_string()))?;
        let k = Cost::new(batch.k);
        let mut hit = false;
        for (x, label) in batch.xs.iter().zip(&batch.labels) {
            let d = wed_quadratic(x, &batch.y, &batch.weights).cost;
            if let Some((l, i)) = *label {
                if d != predicted_distance(&params, l, i) {
                    return Err(dump(&format!("closed form at l={l} i={i}")));
                }
            }
            hit |= d <= k;
        }
        if p * q * r <= 4 {
            let comb = combine_batch(&batch).map_err(|err| dump(&err.to_string()))?;
            let comb_hit = wed_quadratic(&comb.x, &comb.y, &comb.weights).cost <= Cost::new(comb.k);
            if comb_hit != hit {
                return Err(dump("combined instance"));
            }
        }
    }
    Ok(cases)
}
