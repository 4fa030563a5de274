use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const WEIGHTS: &str = r#"{"alphabet_size":3,"denominator":2,"sub":[[0,2,2],[2,0,2],[2,2,0]],"ins":[2,2,2],"del":[2,2,-1]}"#;

fn wedit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wedit")).args(args).output().expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

fn setup(dir: &Path) -> (String, String, String) {
    let p = |name: &str| dir.join(name).to_string_lossy().into_owned();
    fs::write(dir.join("x.txt"), "0 1 2 0 1 2 0 1\n").unwrap();
    fs::write(dir.join("y.txt"), "0 1 2 1 2 0 1 1\n").unwrap();
    fs::write(dir.join("w.json"), WEIGHTS).unwrap();
    (p("x.txt"), p("y.txt"), p("w.json"))
}

#[test]
fn dist_agrees_across_algorithms() {
    let dir = tempfile::tempdir().unwrap();
    let (x, y, w) = setup(dir.path());
    for algo in ["quad", "band", "main", "pillar"] {
        let out = wedit(&["dist", "--x", &x, "--y", &y, "--weights", &w, "--k", "5", "--algo", algo, "--alignment"]);
        assert_eq!(out.status.code(), Some(0), "{algo}");
        let r = &json_lines(&out)[0];
        assert_eq!(r["cost_num"], 4);
        assert_eq!(r["cost_den"], 2);
        assert_eq!(r["algo"], algo);
        assert!(r["cigar"].is_string());
    }
}

#[test]
fn dist_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let (x, y, w) = setup(dir.path());
    let over = wedit(&["dist", "--x", &x, "--y", &y, "--weights", &w, "--k", "1"]);
    assert_eq!(over.status.code(), Some(1));
    assert!(json_lines(&over)[0]["cost_num"].is_null());
    let no_k = wedit(&["dist", "--x", &x, "--y", &y, "--weights", &w, "--algo", "band"]);
    assert_eq!(no_k.status.code(), Some(2));
    let missing = wedit(&["dist", "--x", &x, "--y", "/nonexistent/y.txt", "--weights", &w]);
    assert_eq!(missing.status.code(), Some(2));
    fs::write(dir.path().join("bad.txt"), "0 7\n").unwrap();
    let bad = dir.path().join("bad.txt");
    let out = wedit(&["dist", "--x", bad.to_str().unwrap(), "--y", &y, "--weights", &w]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selfed_and_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let (x, _, _) = setup(dir.path());
    let out = wedit(&["selfed", "--x", &x]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["selfed"], 6);
    let out = wedit(&["decompose", "--x", &x, "--k", "6", "--kind", "std", "--l", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let d = &json_lines(&out)[0];
    assert_eq!(d["boundaries"][0], 0);
    assert_eq!(d["boundaries"].as_array().unwrap().last().unwrap(), 8);
    let out = wedit(&["decompose", "--x", &x, "--k", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn gen_hard_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    for out in [&a, &b] {
        let r = wedit(&["gen-hard", "--seed", "9", "--out", out.to_str().unwrap()]);
        assert_eq!(r.status.code(), Some(0));
    }
    for f in ["Y.txt", "weights.json", "k", "batch/0000.txt"] {
        assert_eq!(fs::read(a.join(f)).unwrap(), fs::read(b.join(f)).unwrap(), "{f}");
    }
    let c = dir.path().join("c");
    let r = wedit(&["gen-hard", "--combined", "--p", "2", "--q", "1", "--r", "1", "--out", c.to_str().unwrap()]);
    assert_eq!(r.status.code(), Some(0));
    for f in ["X.txt", "Y.txt", "weights.json", "k"] {
        assert!(c.join(f).exists(), "{f}");
    }
}

#[test]
fn verify_passes_and_catches_faults() {
    let ok = wedit(&["verify", "--cases", "40", "--max-n", "32", "--seed", "5"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(json_lines(&ok).iter().all(|l| l["status"] == "pass"));
    let bad = wedit(&["verify", "--cases", "40", "--suite", "core", "--inject-fault"]);
    assert_ne!(bad.status.code(), Some(0));
    let lines = json_lines(&bad);
    let fail = lines.iter().find(|l| l["status"] == "fail").expect("a failing suite");
    assert!(fail["repro"]["x"].is_string());
}

#[test]
fn bench_csv() {
    let out = wedit(&["bench", "--n", "2^10,2000", "--k", "4,8", "--algo", "main,band", "--reps", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("algo,n,k,cost_num,cost_den,seconds,pillar_ops,depth"));
    let rows: Vec<Vec<String>> = lines.map(|l| l.split(',').map(str::to_string).collect()).collect();
    assert_eq!(rows.len(), 8);
    for pair in rows.chunks(2) {
        assert_eq!(pair[0][3], pair[1][3]);
        assert_ne!(pair[0][3], "inf");
    }
}
