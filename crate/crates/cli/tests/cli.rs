use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn apolar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_apolar"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, body).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

const OCTAHEDRON: &str =
    r#"{"degree": 6, "convention": "plain", "coeffs": [0, 1, 0, 0, 0, -1, 0]}"#;

fn pentagon(range: std::ops::Range<usize>) -> String {
    let pts: Vec<String> = range
        .map(|k| {
            let t = 2.0 * PI * k as f64 / 5.0;
            format!("[{:?}, {:?}]", t.cos(), t.sin())
        })
        .collect();
    format!("[{}]", pts.join(", "))
}

fn pentagon_base() -> String {
    pentagon(1..5)
}

#[test]
fn octahedron_invariant() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "oct.json", OCTAHEDRON);
    let out = apolar(&["invariant", s(&f)]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "0.3333333333\n");
    let exact = apolar(&["--exact", "invariant", s(&f)]);
    assert_eq!(stdout(&exact), "1/3\n");
    let json: Value =
        serde_json::from_str(&stdout(&apolar(&["--format", "json", "invariant", s(&f)]))).unwrap();
    assert!((json["invariant"][0].as_f64().unwrap() - 1.0 / 3.0).abs() < 1e-15);
}

#[test]
fn catalectant_of_a_sum_of_two_sixth_powers_vanishes() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "two.json",
        r#"{"degree": 6, "coeffs": [1, 0, 0, 0, 0, 0, 1]}"#,
    );
    let out = apolar(&["--exact", "invariant", "--catalectant", s(&f)]);
    assert_eq!(stdout(&out), "2\n0\n");
}

#[test]
fn pentagon_fifth_point() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pent.json", &pentagon_base());
    let out = apolar(&["fifth-point", s(&f)]);
    assert!(out.status.success());
    let mut lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    lines.sort();
    assert_eq!(lines, ["-3", "1"]);
}

#[test]
fn square_fifth_point_fails_everywhere() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "sq.json", r#"[[1, 0], [0, 1], [-1, 0], [0, -1]]"#);
    let out = apolar(&["--exact", "fifth-point", s(&f)]);
    assert_eq!(stdout(&out), "AllValuesFail\n");
}

#[test]
fn samples_verify() {
    let dir = TempDir::new().unwrap();
    let out = apolar(&["sample-selfapolar", "--count", "5", "--seed", "11"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let again = stdout(&apolar(&[
        "sample-selfapolar",
        "--count",
        "5",
        "--seed",
        "11",
    ]));
    assert_eq!(text, again, "same seed, same output");
    let samples: Vec<Value> = serde_json::from_str(&text).unwrap();
    assert_eq!(samples.len(), 5);
    let f = write(&dir, "samples.json", &text);
    let out = apolar(&["verify-theorem1", s(&f)]);
    assert!(out.status.success(), "{}", stdout(&out));
    let one = write(&dir, "one.json", &samples[0].to_string());
    let report: Value = serde_json::from_str(&stdout(&apolar(&[
        "--format",
        "json",
        "verify-theorem1",
        s(&one),
    ])))
    .unwrap();
    assert_eq!(report["self_apolar"], true);
    assert_eq!(report["verified"], true);
    assert_eq!(report["splits"].as_array().unwrap().len(), 6);
}

#[test]
fn generic_sextic_verdict_is_consistent() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "oct.json", OCTAHEDRON);
    let out = apolar(&["verify-theorem1", s(&f)]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("self-apolar: no"));
}

#[test]
fn square_pyramid_is_separated() {
    let dir = TempDir::new().unwrap();
    let f = write(
        &dir,
        "pyr.json",
        r#"[[2, 1], [1, 2], [0, 1], [1, 0], [1, 1]]"#,
    );
    let json: Value = serde_json::from_str(&stdout(&apolar(&[
        "--format",
        "json",
        "max-separated",
        s(&f),
    ])))
    .unwrap();
    assert_eq!(json["separated"], true);
    assert_eq!(json["apex"], 4);
    let g = write(&dir, "pent.json", &pentagon(0..5));
    let five = stdout(&apolar(&["max-separated", s(&g)]));
    assert!(five.starts_with("separated: no"));
}

#[test]
fn quartic_classes() {
    let dir = TempDir::new().unwrap();
    let tet = write(
        &dir,
        "tet.json",
        r#"{"degree": 4, "convention": "plain", "coeffs": [0, 1, 0, 0, -1]}"#,
    );
    assert_eq!(
        stdout(&apolar(&["--exact", "classify-quartic", s(&tet)])),
        "Equianharmonic\n"
    );
    let sq = write(
        &dir,
        "sq.json",
        r#"{"degree": 4, "convention": "plain", "coeffs": [1, 0, 0, 0, -1]}"#,
    );
    assert_eq!(stdout(&apolar(&["classify-quartic", s(&sq)])), "Harmonic\n");
    let triple = write(
        &dir,
        "tr.json",
        r#"{"degree": 4, "convention": "plain", "coeffs": [0, 1, 0, 0, 0]}"#,
    );
    assert_eq!(
        stdout(&apolar(&["classify-quartic", s(&triple)])),
        "Degenerate(3+1)\n"
    );
}

#[test]
fn roots_round_trip() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "oct.json", OCTAHEDRON);
    let roots = stdout(&apolar(&["--format", "json", "roots", s(&f)]));
    let r = write(&dir, "roots.json", &roots);
    let back: Value =
        serde_json::from_str(&stdout(&apolar(&["--format", "json", "from-roots", s(&r)]))).unwrap();
    let inv = write(&dir, "back.json", &back.to_string());
    // Rebuilt with largest coefficient 1, six times the original, so 𝓘 grows by 36.
    assert_eq!(stdout(&apolar(&["invariant", s(&inv)])), "12\n");
}

#[test]
fn transvectant_output() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", r#"{"degree": 1, "coeffs": [1, 0]}"#);
    let q = write(&dir, "q.json", r#"{"degree": 1, "coeffs": [0, 1]}"#);
    let out = stdout(&apolar(&["--exact", "transvect", s(&p), s(&q), "-k", "1"]));
    assert_eq!(out, "[1]\n");
}

#[test]
fn xpoints_of_a_split() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "oct.json", OCTAHEDRON);
    let json: Value = serde_json::from_str(&stdout(&apolar(&[
        "--format",
        "json",
        "xpoints",
        s(&f),
        "--split",
        "0",
    ])))
    .unwrap();
    assert_eq!(json["split"], 0);
    assert_eq!(json["delta_coeffs"]["degree"], 4);
    let all: Value =
        serde_json::from_str(&stdout(&apolar(&["--format", "json", "xpoints", s(&f)]))).unwrap();
    assert_eq!(all.as_array().unwrap().len(), 6);
}

#[test]
fn g2_check_ratio() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "oct.json", OCTAHEDRON);
    let out = stdout(&apolar(&["--exact", "g2-check", s(&f)]));
    assert!(out.contains("ratio: 27"), "{out}");
    assert!(out.contains("compatible: yes"));
}

#[test]
fn plot_writes_svg() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "pent.json", &pentagon_base());
    let svg = dir.path().join("fig.svg");
    let out = apolar(&["plot", s(&f), "--pole", "inf", "-o", s(&svg)]);
    assert!(out.status.success());
    let body = fs::read_to_string(&svg).unwrap();
    assert!(body.starts_with("<svg") && body.contains(r#"width="800""#));
    let out = apolar(&["plot", s(&f), "--pole", "[0, 0.5]"]);
    assert!(stdout(&out).contains("pole"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"degree": 6, "coeffs": [1, 2]}"#);
    assert_eq!(apolar(&["invariant", s(&bad)]).status.code(), Some(2));
    let junk = write(&dir, "junk.json", "not json");
    assert_eq!(apolar(&["invariant", s(&junk)]).status.code(), Some(2));
    assert_eq!(
        apolar(&["invariant", "/nonexistent/file.json"])
            .status
            .code(),
        Some(2)
    );
    let cubic = write(
        &dir,
        "cubic.json",
        r#"{"degree": 3, "coeffs": [1, 0, 0, 1]}"#,
    );
    assert_eq!(apolar(&["invariant", s(&cubic)]).status.code(), Some(3));
    assert_eq!(apolar(&["xpoints", s(&cubic)]).status.code(), Some(3));
    let quartic = write(
        &dir,
        "q.json",
        r#"{"degree": 4, "coeffs": [1, 0, 0, 0, 1]}"#,
    );
    assert_eq!(
        apolar(&["invariant", "--catalectant", s(&quartic)])
            .status
            .code(),
        Some(3)
    );
    let repeated = write(
        &dir,
        "rep.json",
        r#"[[1, 0], [1, 0], [0, 1], [2, 2], [3, 1]]"#,
    );
    assert_eq!(
        apolar(&["max-separated", s(&repeated)]).status.code(),
        Some(3)
    );
}
