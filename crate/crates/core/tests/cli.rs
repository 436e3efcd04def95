use std::process::Command;

use quadsym::cli::{run, Outcome, DEFAULT_CATALOG, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE};
use serde_json::Value;

fn quadsym(args: &[&str]) -> Outcome {
    run(std::iter::once("quadsym").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Vec<Value> {
    let out = quadsym(args);
    assert_eq!(out.code, EXIT_OK, "{args:?}: {}", out.stderr);
    out.stdout.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("quadsym-{}-{name}", std::process::id()));
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn verify_a5() {
    let reports = json(&["verify", "sl2:4", "--json"]);
    let r = &reports[0];
    assert_eq!(r["theorem_ok"], true);
    assert_eq!(r["chartab_ok"], true);
    assert_eq!(r["d"], "18000");
    assert_eq!(r["d_K"], "5");
    assert_eq!(r["d_factored"]["factors"], serde_json::json!([[2, 4], [3, 2], [5, 3]]));
    assert!(r.get("timing_ms").is_none());
}

#[test]
fn verify_frobenius_and_trivial_group() {
    let r = &json(&["verify", "perm:[(1 2 3 4 5 6 7),(2 3 5)(4 7 6)]", "--json"])[0];
    assert_eq!((r["n"].as_u64(), r["m"].as_u64(), r["d"].as_str()), (Some(21), Some(5), Some("21")));
    let r = &json(&["verify", "cyclic:1", "--json"])[0];
    assert_eq!(r["d"], "1");
    assert_eq!(r["theorem_ok"], true);
}

#[test]
fn symbol_values() {
    assert_eq!(quadsym(&["symbol", "cyclic:5", "--a", "2"]).stdout, "-1\n");
    assert_eq!(quadsym(&["symbol", "cyclic:5", "--a", "-1"]).stdout, "1\n");
    assert_eq!(quadsym(&["symbol", "cyclic:5", "--a", "10"]).stdout, "0\n");
    let r = &json(&["symbol", "cyclic:4", "--table", "--json"])[0];
    assert_eq!(r["symbol_values"], serde_json::json!([0, 1, 0, -1]));
    let r = &json(&["symbol", "sym:4", "--table", "--json"])[0];
    assert_eq!(r["symbol_trivial"], true);
    assert_eq!(quadsym(&["symbol", "cyclic:5"]).code, EXIT_USAGE);
}

#[test]
fn classical_symbols() {
    assert_eq!(quadsym(&["kronecker", "1", "0"]).stdout, "1\n");
    assert_eq!(quadsym(&["kronecker", "-4", "3"]).stdout, "-1\n");
    assert_eq!(quadsym(&["kronecker", "3", "5"]).code, EXIT_USAGE);
    assert_eq!(quadsym(&["jacobi", "2", "15"]).stdout, "1\n");
    assert_eq!(quadsym(&["jacobi", "-16", "3"]).stdout, "-1\n");
    assert_eq!(quadsym(&["jacobi", "2", "4"]).code, EXIT_USAGE);
    let r = &json(&["jacobi", "100000000000000000000000000000", "3", "--json"])[0];
    assert_eq!(r["jacobi"], 1);
}

#[test]
fn classes_and_chartab() {
    let r = &json(&["classes", "sym:3", "--json"])[0];
    let sizes: Vec<u64> = r["classes"].as_array().unwrap().iter().map(|c| c["size"].as_u64().unwrap()).collect();
    assert_eq!(sizes, vec![1, 3, 2]);
    assert_eq!(quadsym(&["chartab", "sym:3"]).stdout, "# conductor 6 classes 3\n[1] [1] [1]\n[1] [-1] [1]\n[2] [0] [-1]\n");
    let r = &json(&["chartab", "cyclic:3", "--json"])[0];
    assert_eq!(r["orthogonality_ok"], true);
    assert_eq!(r["rows"][1][1], serde_json::json!(["-1", "-1"]));
}

#[test]
fn sl2_formula() {
    let r = &json(&["sl2-formula", "16", "--json"])[0];
    assert_eq!(r["d_K"], "65537");
    assert_eq!(r["d_square"], false);
    let r = &json(&["sl2-formula", "3", "--json"])[0];
    assert_eq!(r["d"], "9073705536");
    assert_eq!(r["d_square"], true);
    assert_eq!(quadsym(&["sl2-formula", "17"]).code, EXIT_USAGE);
}

#[test]
fn exit_codes() {
    let out = quadsym(&["disc", "cyclic 4"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("position"), "{}", out.stderr);
    assert_eq!(quadsym(&["disc", "sym:9"]).code, EXIT_USAGE);
    assert_eq!(quadsym(&["disc", "sym:7", "--max-order", "100"]).code, EXIT_RESOURCE);
    assert_eq!(quadsym(&["verify", "alt:6", "--max-order", "100"]).code, EXIT_RESOURCE);
    assert_eq!(quadsym(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(quadsym(&["--help"]).code, EXIT_OK);
}

#[test]
fn catalog_files() {
    let path = temp_file("catalog.txt", "# two groups\n\ncyclic:6   # comment\n  q8\n");
    let reports = json(&["verify", "--catalog", path.to_str().unwrap(), "--json"]);
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["label"], "cyclic:6");
    assert_eq!(reports[1]["label"], "q8");

    let bad = temp_file("bad.txt", "cyclic:3\ncyclic:\n");
    assert_eq!(quadsym(&["verify", "--catalog", bad.to_str().unwrap()]).code, EXIT_USAGE);
    assert_eq!(quadsym(&["verify", "--catalog", "/nonexistent/catalog.txt"]).code, EXIT_USAGE);
    let _ = std::fs::remove_file(path);
    let _ = std::fs::remove_file(bad);
}

#[test]
fn catalog_output_is_deterministic() {
    let path = temp_file("default.txt", DEFAULT_CATALOG);
    let p = path.to_str().unwrap();
    let first = quadsym(&["verify", "--catalog", p, "--json", "--seed", "11"]);
    let second = quadsym(&["verify", "--catalog", p, "--json", "--seed", "11"]);
    assert_eq!(first.code, EXIT_OK, "{}", first.stderr);
    assert_eq!(first, second);
    assert_eq!(first.stdout.lines().count(), 56);
    let labels: Vec<String> = first
        .stdout
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["label"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(labels[0], "cyclic:1");
    assert_eq!(labels[55], "cyclic:3*dihedral:4");
    let _ = std::fs::remove_file(path);
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_quadsym");
    let out = Command::new(bin).args(["verify", "dihedral:6"]).output().unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("dihedral:6"));
    let out = Command::new(bin).args(["disc", "cyclic:"]).output().unwrap();
    assert_eq!(out.status.code(), Some(EXIT_USAGE));
}
