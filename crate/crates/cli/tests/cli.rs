use std::process::{Command, Output};

use serde_json::Value;

fn rexspec(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rexspec")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = rexspec(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn verify_passes_for_two_step_extension() {
    let o = rexspec(&["verify", "--kind", "linear", "--m", "2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&["verify", "--kind", "linear", "--m", "2,3"]);
    assert_eq!(v["pass"], Value::Bool(true));
    assert_eq!(v["checks"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_radial_includes_bridge_identity() {
    let v = json(&["verify", "--kind", "radial", "--m", "2", "--alpha", "7/2"]);
    let names: Vec<&str> = v["checks"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"appendix_a"));
    assert_eq!(v["pass"], Value::Bool(true));
}

#[test]
fn unirreps_match_table_rows() {
    let v = json(&["unirreps", "--family", "a", "--m", "2,3", "--N", "0..6"]);
    // s values per N for k = 2, m = (2,3)
    let want: [&[&str]; 7] = [
        &["0", "0"],
        &["1/2", "0"],
        &["1/2", "1/2"],
        &["1/2", "1/2", "0"],
        &["1/2", "1/2", "0", "0"],
        &["1", "1/2", "0", "0"],
        &["1", "1", "0", "0"],
    ];
    let rows = v["unirreps"].as_array().unwrap();
    assert_eq!(rows.len(), 7);
    for (row, want) in rows.iter().zip(want) {
        let s: Vec<&str> = row["s"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
        assert_eq!(s, want, "N = {}", row["N"]);
    }
}

#[test]
fn parity_violation_is_a_user_error() {
    let o = rexspec(&["build", "--kind", "linear", "--m", "1"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("must be even"), "{err}");
}

#[test]
fn user_errors_exit_with_two() {
    assert_eq!(rexspec(&["build", "--kind", "radial", "--m", "2", "--alpha", "3.5"]).status.code(), Some(2));
    assert_eq!(rexspec(&["build", "--kind", "radial", "--m", "2"]).status.code(), Some(2));
    assert_eq!(rexspec(&["system", "--family", "a", "--m", "2", "--n", "2"]).status.code(), Some(2));
    assert_eq!(rexspec(&["system", "--family", "z"]).status.code(), Some(2));
    assert_eq!(rexspec(&["frobnicate"]).status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_rexspec"))
        .args(["spectrum", "--m", "2"])
        .env("REXSPEC_THREADS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_round_trips_byte_identically() {
    let dir = std::env::temp_dir().join(format!("rexspec-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    for (name, args) in [
        ("build", vec!["build", "--kind", "radial", "--m", "2", "--alpha", "7/2"]),
        ("unirreps", vec!["unirreps", "--family", "e", "--m", "2", "--n", "2", "--N", "-5..8"]),
        ("potential", vec!["plot-data", "--m", "2", "--series", "potential", "--points", "101"]),
    ] {
        let path = dir.join(format!("{name}.json"));
        let mut full = args.clone();
        full.extend(["--format", "json", "--output", path.to_str().unwrap()]);
        assert_eq!(rexspec(&full).status.code(), Some(0));
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed: Value = serde_json::from_str(&text).unwrap();
        let again = serde_json::to_string_pretty(&parsed).unwrap() + "\n";
        assert_eq!(again, text, "{name}");
    }
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn level_diagram_has_four_chains() {
    let o = rexspec(&["plot-data", "--m", "2,3", "--series", "levels", "--nu-max", "12", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rd = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(rd.headers().unwrap(), vec!["chain_id", "step", "E"]);
    let mut chains = std::collections::BTreeSet::new();
    let mut energies = Vec::new();
    for rec in rd.records() {
        let rec = rec.unwrap();
        chains.insert(rec[0].to_string());
        energies.push(rec[2].parse::<i64>().unwrap());
    }
    assert_eq!(chains.len(), 4);
    energies.sort();
    // E = 2ν + 1 over ν ∈ {−4, −3} ∪ [0, 12]
    let want: Vec<i64> = [-4, -3].into_iter().chain(0..=12).map(|nu| 2 * nu + 1).collect();
    assert_eq!(energies, want);
}

#[test]
fn wavefunction_samples_are_normalized() {
    let o = rexspec(&["plot-data", "--m", "2", "--series", "wavefunction", "--nu", "-3", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rd = csv::Reader::from_reader(o.stdout.as_slice());
    let pts: Vec<(f64, f64)> =
        rd.records().map(|r| r.unwrap()).map(|r| (r[0].parse().unwrap(), r[1].parse().unwrap())).collect();
    let h = pts[1].0 - pts[0].0;
    let norm: f64 = pts.iter().map(|p| p.1 * p.1).sum::<f64>() * h;
    assert!((norm - 1.0).abs() < 1e-6, "{norm}");
}

#[test]
fn thread_cap_is_honored() {
    let o = Command::new(env!("CARGO_BIN_EXE_rexspec"))
        .args(["unirreps", "--family", "a", "--m", "2", "--N", "-2..4", "--format", "json"])
        .env("REXSPEC_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}
