use std::process::{Command, Output};

use serde_json::Value;

fn m11(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_m11"))
        .args(args)
        .env_remove("M11_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn lines(o: &Output) -> Vec<Value> {
    String::from_utf8(o.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).expect("stdout is JSON lines"))
        .collect()
}

#[test]
fn certify_group_exits_zero() {
    let o = m11(&["certify-group"]);
    assert!(o.status.success());
    let v = lines(&o);
    assert_eq!(v.len(), 7);
    assert!(v.iter().all(|r| r["holds"] == true));
    assert!(!o.stderr.is_empty());
}

#[test]
fn json_flag_silences_stderr() {
    let o = m11(&["certify-group", "--json"]);
    assert!(o.status.success());
    assert!(o.stderr.is_empty());
}

#[test]
fn fixed_points_three_decimals() {
    let o = m11(&["fixed-points", "--precision", "3"]);
    let v = lines(&o);
    let got: Vec<(f64, f64)> =
        v[..3].iter().map(|r| (r["re"].as_f64().unwrap(), r["im"].as_f64().unwrap())).collect();
    assert_eq!(got, vec![(0.0, 4.253), (3.516, 2.394), (4.2, 3.472)]);
}

#[test]
fn scan_basic_is_deterministic_and_in_table() {
    let a = m11(&["scan-basic", "--t", "2", "--pmax", "60"]);
    let b = m11(&["scan-basic", "--t", "2", "--pmax", "60", "--threads", "1"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v = lines(&a);
    let summary = v.last().unwrap();
    assert_eq!(summary["kind"], "summary");
    assert_eq!(summary["other"], 0);
    for r in v.iter().filter(|r| r["kind"] == "prime") {
        let label = r["row"]["label"].as_str().unwrap();
        assert!(label == "MuOrdinary" || label == "Basic");
    }
}

#[test]
fn cache_dir_from_flag_and_env() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = m11(&["scan-basic", "--t", "3", "--pmax", "20", "--cache-dir", d]);
    assert!(o.status.success());
    assert!(dir.path().join("counts.csv").exists());
    let env_dir = tempfile::tempdir().unwrap();
    let o2 = Command::new(env!("CARGO_BIN_EXE_m11"))
        .args(["scan-basic", "--t", "3", "--pmax", "20"])
        .env("M11_CACHE_DIR", env_dir.path())
        .output()
        .unwrap();
    assert!(o2.status.success());
    assert!(env_dir.path().join("counts.csv").exists());
    assert_eq!(o.stdout, o2.stdout);
}

#[test]
fn errors_are_objects_with_nonzero_exit() {
    let o = m11(&["count", "--t", "2", "--p", "5"]);
    assert_eq!(o.status.code(), Some(2));
    let v = lines(&o);
    assert_eq!(v[0]["error"], "bad_prime");
    let o = m11(&["hypotheses", "--lambda", "2", "--prime", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(lines(&o)[0]["error"], "precondition");
}

#[test]
fn st_predict_through_cli() {
    let o = m11(&["hypotheses", "--lambda", "3", "--prime", "3"]);
    assert_eq!(lines(&o)[0]["prediction"], "Basic");
    let o = m11(&["hypotheses", "--lambda", "3", "--prime", "7"]);
    assert_eq!(lines(&o)[0]["prediction"], "NoPrediction");
}

#[test]
fn plot_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let o = m11(&["plot", "--triangle", "--geodesic", "--out", dir.path().to_str().unwrap()]);
    assert!(o.status.success());
    for name in ["triangle.svg", "geodesic.svg"] {
        let body = std::fs::read_to_string(dir.path().join(name)).unwrap();
        assert!(body.starts_with("<?xml") || body.starts_with("<svg"));
        assert!(body.contains("</svg>"));
    }
    assert_eq!(m11(&["plot"]).status.code(), Some(2));
}

#[test]
fn cm_locate_gives_opposite_tags() {
    let o = m11(&["cm-locate", "--lambda", "3"]);
    assert!(o.status.success());
    let v = lines(&o);
    assert_eq!(v.len(), 2);
    assert_eq!(v[0]["t"], "-2+2*u");
    assert_ne!(v[0]["order"], v[1]["order"]);
}

#[test]
fn lpoly_matches_counts() {
    let o = m11(&["lpoly", "--t", "-1", "--p", "3"]);
    assert!(o.status.success());
    let v = &lines(&o)[0];
    let c: Vec<i64> = v["coeffs"].as_array().unwrap().iter().map(|x| x.as_i64().unwrap()).collect();
    assert_eq!(&c[1..4], &[0, 0, 0]);
    let n4 = v["counts"][3].as_i64().unwrap();
    assert_eq!(4 * c[4], n4 - 82);
}
