use std::path::PathBuf;
use std::process::{Command, Output};

fn zeropoint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zeropoint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("valid JSON")
}

fn scratch(name: &str) -> PathBuf {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    dir.join(name)
}

#[test]
fn blackbody_csv_layout() {
    let o = zeropoint(&["blackbody", "--x-min", "0.01", "--x-max", "10", "--points", "100", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    let meta: Vec<&&str> = lines.iter().take_while(|l| l.starts_with('#')).collect();
    assert_eq!(meta.len(), 3);
    assert!(meta.contains(&&"# points=100"));
    assert_eq!(lines[3], "x,occupation,energy,energy_with_zpe,excess");
    assert_eq!(lines.len(), 104);
    let first: Vec<f64> = lines[4].split(',').map(|v| v.parse().unwrap()).collect();
    assert_eq!(first[0], 0.01);
    assert!(!text.contains('\r'));
}

#[test]
fn twoslit_json_document() {
    let o = zeropoint(&[
        "twoslit", "--lambda-um", "0.58", "--d-um", "50", "--w-um", "5", "--D-m", "1", "--mode", "closed", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["columns"], serde_json::json!(["x_m", "intensity_per_m"]));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 1001);
    let centre = &rows[500];
    assert_eq!(centre[0], 0.0);
    let k = v["params"]["K_per_m"].as_f64().unwrap();
    let beta = v["params"]["aspect_ratio"].as_f64().unwrap();
    let expected = 4.0 * beta * k / std::f64::consts::PI;
    assert!((centre[1].as_f64().unwrap() - expected).abs() < 1e-12 * expected);
    assert!((k - 541.653_905_791_343_7).abs() < 1e-9);
    assert_eq!(v["params"]["fraunhofer_warning"], false);
}

#[test]
fn twoslit_oracle_mode_matches_closed() {
    let common = ["twoslit", "--lambda-um", "0.58", "--d-um", "50", "--w-um", "5", "--D-m", "1", "--points", "41", "--format", "json"];
    let closed = json(&zeropoint(&[&common[..], &["--mode", "closed"]].concat()));
    let oracle = json(&zeropoint(&[&common[..], &["--mode", "quadratic"]].concat()));
    for (a, b) in closed["rows"].as_array().unwrap().iter().zip(oracle["rows"].as_array().unwrap()) {
        let (a, b) = (a[1].as_f64().unwrap(), b[1].as_f64().unwrap());
        assert!((a - b).abs() <= 1e-9 * a.max(1.0));
    }
    assert_eq!(oracle["params"]["mode"], "quadratic");
}

#[test]
fn pair_rate_record() {
    let o = zeropoint(&["pair-rate", "--eps", "1", "--spin", "0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["columns"], serde_json::json!(["eps", "spin", "value", "terms_used", "last_term"]));
    let row = &v["rows"][0];
    let value = row[2].as_f64().unwrap();
    assert!(((value - 1.723_675_682_208_932_7e-4) / value).abs() < 1e-13);
    assert!(row[3].as_u64().unwrap() > 1);
    assert!(row[4].as_f64().unwrap() < 1e-16 * value);
}

#[test]
fn outputs_are_byte_identical() {
    let args = ["vacuum-energy", "--b-min", "0.01", "--b-max", "1", "--points", "5"];
    let a = zeropoint(&args);
    let b = zeropoint(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn exit_codes() {
    assert_eq!(zeropoint(&["nonsense"]).status.code(), Some(2));
    assert_eq!(zeropoint(&["pair-rate", "--eps", "-1"]).status.code(), Some(2));
    assert_eq!(zeropoint(&["blackbody", "--x-min", "-1", "--x-max", "1", "--points", "3"]).status.code(), Some(2));
    let bad_geometry = zeropoint(&["twoslit", "--lambda-um", "0.58", "--d-um", "5", "--w-um", "5", "--D-m", "1"]);
    assert_eq!(bad_geometry.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad_geometry.stderr).contains("half-separation"));
    assert_eq!(zeropoint(&["pair-rate", "--spin", "0.7", "--eps", "1"]).status.code(), Some(2));
    assert_eq!(zeropoint(&["--help"]).status.code(), Some(0));
}

#[test]
fn config_file_with_flag_override() {
    let path = scratch("twoslit_config.json");
    std::fs::write(
        &path,
        r#"{"lambda-um": 0.58, "d-um": 50, "w-um": 5, "D-m": 1, "points": 3, "x-min-mm": -1, "x-max-mm": 1, "format": "json"}"#,
    )
    .unwrap();
    let cfg = path.to_str().unwrap();
    let base = json(&zeropoint(&["twoslit", "--config", cfg]));
    assert_eq!(base["rows"].as_array().unwrap().len(), 3);
    assert_eq!(base["params"]["D_m"], 1.0);
    let over = json(&zeropoint(&["twoslit", "--config", cfg, "--D-m", "2"]));
    assert_eq!(over["params"]["D_m"], 2.0);
    let k1 = base["params"]["K_per_m"].as_f64().unwrap();
    let k2 = over["params"]["K_per_m"].as_f64().unwrap();
    assert!((k1 / k2 - 2.0).abs() < 1e-12);
}

#[test]
fn output_to_file() {
    let path = scratch("unruh.json");
    let o = zeropoint(&["unruh", "--accel", "1", "--output", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let t = v["rows"][0][1].as_f64().unwrap();
    assert!((t - 1.0 / (2.0 * std::f64::consts::PI)).abs() < 1e-16);
}

#[test]
fn verify_reports_per_property() {
    let o = zeropoint(&["verify", "maxwell"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("PASS maxwell/spin_matrix_algebra")));
    assert!(text.lines().all(|l| !l.starts_with("FAIL")));
    let twoslit = stdout(&zeropoint(&["verify", "twoslit"]));
    assert!(twoslit.contains("twoslit/oracle_equivalence"));
}

#[test]
fn maxwell_check_spectrum() {
    let v = json(&zeropoint(&["maxwell-check", "--p", "0", "3", "4"]));
    let rows = v["rows"].as_array().unwrap();
    let eig: Vec<f64> = rows[..6].iter().map(|r| r[1].as_f64().unwrap()).collect();
    for (got, want) in eig.iter().zip([-5.0, -5.0, 0.0, 0.0, 5.0, 5.0]) {
        assert!((got - want).abs() < 1e-12);
    }
    assert_eq!(rows[6][0], "commutator_forward_plus");
    assert!((rows[6][2].as_f64().unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn state_count_and_apertures() {
    let v = json(&zeropoint(&["state-count", "--lambda-um", "0.58", "--w-um", "0.1"]));
    assert_eq!(v["params"]["ground_state_confined"], true);
    let s = json(&zeropoint(&["single-slit", "--lambda-um", "0.579", "--w-um", "6000", "--D-m", "1", "--points", "5", "--format", "json"]));
    let x1 = s["params"]["first_minimum_over_D"].as_f64().unwrap();
    assert!((x1 - 4.825e-5).abs() < 1e-15);
    let a = json(&zeropoint(&["aperture", "--lambda-um", "0.5", "--w-um", "1000", "--D-m", "2", "--format", "json"]));
    assert_eq!(a["rows"][0][1], 1.0);
    assert!(a["params"]["dark_ring_1_m"].as_f64().unwrap() > 0.0);
}

#[test]
fn remaining_subcommands_run() {
    for args in [
        vec!["magnetization", "--b", "0.1"],
        vec!["vacuum-energy", "--b-tesla", "4.4e8"],
        vec!["pair-rate-1d", "--eps", "1"],
        vec!["pair-rate", "--e-volt-per-m", "1e18", "--spin", "0.5"],
        vec!["path", "--accel", "2", "--branch", "backward", "--points", "5"],
        vec!["unruh", "--accel-m-s2", "9.81"],
    ] {
        let o = zeropoint(&args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stdout.is_empty());
    }
}

#[test]
fn help_names_the_formula() {
    let text = stdout(&zeropoint(&["twoslit", "--help"]));
    assert!(text.contains("(4βK/π)cos²(Kx)sinc²(βKx)"));
    let text = stdout(&zeropoint(&["pair-rate-1d", "--help"]));
    assert!(text.contains("ln(1+e^{-π/ε})"));
}
