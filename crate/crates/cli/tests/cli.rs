use std::process::{Command, Output};

use serde_json::Value;

fn sombor(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sombor"))
        .args(args)
        .env_remove("SOMBOR_ENUM_CAP")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn index_of_l5() {
    let out = sombor(&["index", "--family", "L", "--n", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "10 + 3*sqrt(2) + 4*sqrt(5) + 2*sqrt(13) ≈ 30.39801515\n"
    );
}

#[test]
fn index_kinds_and_selectors() {
    let co = sombor(&["index", "--family", "X", "--n", "5", "--kind", "coindex"]);
    assert_eq!(stdout(&co), "6*sqrt(2) ≈ 8.485281374\n");
    let by_recipe = sombor(&["index", "--recipe", "0,0,0"]);
    let by_family = sombor(&["index", "--family", "X", "--n", "5"]);
    assert_eq!(stdout(&by_recipe), stdout(&by_family));
    let by_g6 = sombor(&["index", "--graph6", "DL{"]);
    assert_eq!(
        stdout(&by_g6),
        stdout(&sombor(&["index", "--family", "L", "--n", "5"]))
    );
    let all = stdout(&sombor(&[
        "index", "--family", "K", "--n", "3", "--kind", "all",
    ]));
    assert!(all.contains("SO = 6*sqrt(2) ≈ 8.485281374"));
    assert!(all.contains("SO_bar = 0 ≈ 0"));
}

#[test]
fn index_json() {
    let out = sombor(&["index", "--family", "L", "--n", "5", "--format", "json"]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 5);
    assert_eq!(v["edges"], 7);
    assert_eq!(v["is_two_tree"], true);
    assert_eq!(v["SO"]["exact"], "10 + 3*sqrt(2) + 4*sqrt(5) + 2*sqrt(13)");
    assert_eq!(v["SO"]["approx"].as_f64(), Some(30.39801515));
    assert_eq!(v["SO_bar"]["approx"].as_f64(), Some(10.03952968));
}

#[test]
fn random_selection_is_seeded() {
    let a = sombor(&[
        "index", "--random", "--n", "15", "--seed", "9", "--kind", "all",
    ]);
    let b = sombor(&[
        "index", "--random", "--n", "15", "--seed", "9", "--kind", "all",
    ]);
    let c = sombor(&[
        "index", "--random", "--n", "15", "--seed", "10", "--kind", "all",
    ]);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn enumerate_order_five() {
    let out = sombor(&["enumerate", "--n", "5", "--format", "graph6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let mut lines: Vec<&str> = text.lines().collect();
    lines.sort();
    assert_eq!(lines.len(), 2);
    let x5 = stdout(&sombor(&["export", "--graph6", lines[0]]));
    assert_eq!(x5.trim(), lines[0]);
}

#[test]
fn enumerate_json_and_manifest() {
    let dir = std::env::temp_dir().join(format!("sombor-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let manifest = dir.join("manifest.json");
    let out = sombor(&[
        "enumerate",
        "--n",
        "8",
        "--format",
        "json",
        "--manifest",
        manifest.to_str().unwrap(),
    ]);
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["count"], 39);
    assert_eq!(v["graphs"].as_array().unwrap().len(), 39);
    let m: Value = serde_json::from_slice(&std::fs::read(&manifest).unwrap()).unwrap();
    assert_eq!(m["count"], 39);
    assert_eq!(m["checksum"], v["checksum"]);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_theorems_passes() {
    let out = sombor(&["verify-theorems", "--n", "5..9", "--top", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["all_passed"], true);
    assert_eq!(v["claims_passed"], 20);
    for r in v["reports"].as_array().unwrap() {
        assert!(r["tiers"].as_array().unwrap().len() <= 2);
    }
}

#[test]
fn swapped_witnesses_exit_one() {
    let out = sombor(&[
        "verify-theorems",
        "--n",
        "5..7",
        "--swap-witnesses",
        "--format",
        "csv",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1 + 3 * 4);
    assert!(text.lines().skip(1).all(|l| l.contains(",fail,")));
}

#[test]
fn check_lemmas_clean_and_inverted() {
    let out = sombor(&["check-lemmas", "--max", "200"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "lemma-id,claim,witness,lhs,rhs\n");
    let inv = sombor(&["check-lemmas", "--max", "200", "--inverted"]);
    assert_eq!(inv.status.code(), Some(1));
    assert_eq!(stdout(&inv).lines().count(), 1 + 39601);
    let json = sombor(&["check-lemmas", "--max", "50", "--format", "json"]);
    let v: Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v["total_violations"], 0);
    let anchor = v["anchors"]["two_f_5_4_plus_g_5_4"].as_f64().unwrap();
    assert!((anchor - 1.8725).abs() < 1e-4);
}

#[test]
fn conjecture_csv_readings() {
    let out = sombor(&[
        "conjecture",
        "--n",
        "5..6",
        "--format",
        "csv",
        "--reading",
        "literal",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 3);
    assert!(rows[1].starts_with("5,2,2,"));
    assert!(rows[1].contains(",literal,"));
}

#[test]
fn export_formats() {
    let dot = stdout(&sombor(&[
        "export", "--family", "X", "--n", "5", "--format", "dot",
    ]));
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 7);
    assert!(dot.starts_with("graph G {"));
    let k2 = sombor(&["export", "--family", "K", "--n", "2"]);
    assert_eq!(stdout(&k2), "A_\n");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["enumerate", "--n", "13"][..],
        &["enumerate", "--n", "5", "--format", "dot"],
        &["index", "--family", "L", "--n", "4"],
        &["index", "--recipe", "0,5"],
        &["index", "--graph6", "A"],
        &["export", "--family", "X", "--n", "5", "--format", "png"],
        &["conjecture", "--n", "4..6"],
        &["verify-theorems", "--n", "9..5"],
        &["frobnicate"],
        &["index"],
    ] {
        let out = sombor(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn cap_from_flag_and_env() {
    let out = sombor(&["enumerate", "--n", "7", "--cap", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(env!("CARGO_BIN_EXE_sombor"))
        .args(["enumerate", "--n", "7"])
        .env("SOMBOR_ENUM_CAP", "6")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = sombor(&["enumerate", "--n", "7", "--cap", "7"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).lines().count(), 12);
}

#[test]
fn help_exits_zero() {
    let out = sombor(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verify-theorems"));
}
