use std::process::{Command, Output};

fn rrqd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rrqd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

#[test]
fn analyze_named_states() {
    let out = rrqd(&["analyze", "--state", "wwbar"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["verdict"], "Polygamous");
    assert!((v["q"].as_f64().unwrap() - 0.322).abs() < 1e-3);
    assert_eq!(v["log_base"], "e");

    let v = json(&rrqd(&["analyze", "--state", "ghz"]));
    assert_eq!(v["verdict"], "Monogamous");
    assert!((v["q"].as_f64().unwrap() + std::f64::consts::LN_2).abs() < 1e-10);
    assert_eq!(v["slocc_label"]["label"], "D_{1,1,1}");
}

#[test]
fn analyze_product_amplitudes() {
    let amps = r#"{"n":3,"amplitudes":[[1,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0],[0,0]]}"#;
    let v = json(&rrqd(&["analyze", "--amplitudes", amps]));
    for key in ["d_ab", "d_ac", "d_abc", "q"] {
        assert!(v[key].as_f64().unwrap().abs() < 1e-12, "{key}");
    }
    assert_eq!(v["verdict"], "Boundary");
}

#[test]
fn analyze_spinors() {
    let spinors = r#"[{"beta":3.141592653589793,"alpha":0},{"beta":1.5707963267948966,"alpha":0},{"beta":0,"alpha":0}]"#;
    let v = json(&rrqd(&["analyze", "--spinors", spinors]));
    assert_eq!(v["verdict"], "Polygamous");
    assert_eq!(v["slocc_label"]["label"], "D_{1,1,1}");
}

#[test]
fn exit_codes() {
    assert_eq!(rrqd(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(rrqd(&["analyze"]).status.code(), Some(1));
    let bad = rrqd(&["analyze", "--amplitudes", r#"{"n":3,"amplitudes":[[1,0]]}"#]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    assert_eq!(
        rrqd(&["analyze", "--state", "nonsense"]).status.code(),
        Some(2)
    );
    assert_eq!(
        rrqd(&["sweep-theta", "--points", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(rrqd(&["--help"]).status.code(), Some(0));
}

#[test]
fn sweep_theta_csv_is_byte_identical() {
    let dir = std::env::temp_dir().join(format!("rrqd-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let (a, b) = (dir.join("a.csv"), dir.join("b.csv"));
    for p in [&a, &b] {
        let out = rrqd(&[
            "sweep-theta",
            "--points",
            "25",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert!(out.status.success());
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("theta,d_ab,d_abc,q,verdict"));
    assert_eq!(lines.clone().count(), 25);
    assert!(lines.all(|l| l.ends_with(",Polygamous")));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn sweep_genw_config_file_and_flags() {
    let dir = std::env::temp_dir().join(format!("rrqd-cfg-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cfg = dir.join("cfg.json");
    std::fs::write(&cfg, r#"{"points": 4, "phase_delta": [0.0, 1.0]}"#).unwrap();
    let out = rrqd(&[
        "sweep-genw",
        "--config",
        cfg.to_str().unwrap(),
        "--points",
        "3",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("a_abs,b_abs,phase_delta,d_ab,d_ac,d_abc,q,verdict")
    );
    // 3 grid subdivisions give 6 points, times two phases
    assert_eq!(lines.count(), 12);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn table_and_self_check() {
    let out = rrqd(&["table1"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.starts_with("GHZ ") && l.contains("Monogamous")));

    let v = json(&rrqd(&["table1", "--json"]));
    assert_eq!(v["rows"].as_array().unwrap().len(), 5);

    let out = rrqd(&["self-check"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("PASS")).count(), 8);

    assert_eq!(
        rrqd(&["self-check", "--perturb", "1e-6"]).status.code(),
        Some(2)
    );
}
