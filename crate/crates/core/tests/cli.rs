use std::process::{Command, Output};

fn monopole(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monopole"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn csv_rows(o: &Output) -> Vec<Vec<f64>> {
    stdout(o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(|c| c.parse().unwrap()).collect())
        .collect()
}

#[test]
fn verify_exit_codes() {
    let quick = ["verify", "--kappa-max", "1", "--samples", "5000"];
    assert_eq!(monopole(&quick).status.code(), Some(0));
    assert_eq!(
        monopole(&["verify", "--kappa-max", "0", "--samples", "5000"])
            .status
            .code(),
        Some(0)
    );
    let mut strict = quick.to_vec();
    strict.extend(["--tol", "1e-30"]);
    assert_eq!(monopole(&strict).status.code(), Some(1));
    assert_eq!(
        monopole(&["verify", "--fd-step", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        monopole(&["verify", "--kappa-max", "-1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        monopole(&["verify", "--delta", "0.5"]).status.code(),
        Some(2)
    );
    assert_eq!(monopole(&["bogus"]).status.code(), Some(2));
}

#[test]
fn verify_json_report() {
    let out = monopole(&[
        "verify",
        "--kappa-max",
        "1",
        "--samples",
        "5000",
        "--seed",
        "7",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["seed"], 7);
    let recs = v["records"].as_array().unwrap();
    assert!(!recs.is_empty());
    for key in ["name", "eq", "kappa", "delta", "max_dev", "tol", "pass"] {
        assert!(recs[0].get(key).is_some(), "{key}");
    }
}

#[test]
fn verify_writes_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = monopole(&[
        "verify",
        "--kappa-max",
        "0",
        "--samples",
        "5000",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("\"verdict\": \"pass\""));
    let bad = monopole(&[
        "verify",
        "--kappa-max",
        "0",
        "--samples",
        "5000",
        "--out",
        "/nonexistent/dir/x",
    ]);
    assert_ne!(bad.status.code(), Some(0));
}

#[test]
fn field_shell_is_radial() {
    let out = monopole(&["field", "--kappa", "2", "--delta", "0"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("x1,x2,x3,A1,A2,A3,B1,B2,B3\n"));
    let rows = csv_rows(&out);
    assert_eq!(rows.len(), 100);
    for r in &rows {
        let (x, b) = ([r[0], r[1], r[2]], [r[6], r[7], r[8]]);
        let c = [
            x[1] * b[2] - x[2] * b[1],
            x[2] * b[0] - x[0] * b[2],
            x[0] * b[1] - x[1] * b[0],
        ];
        assert!(c.iter().all(|v| v.abs() < 1e-14));
        // 17 significant digits
        assert!(text
            .lines()
            .nth(1)
            .unwrap()
            .split(',')
            .all(|c| c.contains("e") && c.trim_start_matches('-').len() >= 20));
    }
}

#[test]
fn field_delta_changes_a_not_b() {
    let zero = csv_rows(&monopole(&["field", "--kappa", "0"]));
    assert!(zero.iter().all(|r| r[3..].iter().all(|v| *v == 0.0)));
    let d0 = csv_rows(&monopole(&["field", "--kappa", "2", "--delta", "0"]));
    let d2 = csv_rows(&monopole(&["field", "--kappa", "2", "--delta", "2"]));
    let mut a_differs = false;
    for (p, q) in d0.iter().zip(&d2) {
        assert_eq!(p[6..], q[6..]);
        a_differs |= (3..6).any(|k| (p[k] - q[k]).abs() > 1e-6);
    }
    assert!(a_differs);
    let json = monopole(&[
        "field",
        "--kappa",
        "1",
        "--n-theta",
        "2",
        "--n-phi",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 6);
    assert!(v[0].get("B3").is_some());
}

#[test]
fn state_density_matches_restricted() {
    let out = monopole(&[
        "state",
        "--phi",
        "x3",
        "--kappa",
        "2",
        "--point",
        "1,0.1,0.4,0.7",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let line = text.lines().last().unwrap();
    assert!(line.ends_with("yes"), "{line}");
    let x3 = 0.1f64.cos();
    let d: f64 = line.split_whitespace().nth(8).unwrap().parse().unwrap();
    assert!((d - x3 * x3).abs() < 1e-12);

    let one = stdout(&monopole(&[
        "state",
        "--phi",
        "1",
        "--kappa",
        "0",
        "--point",
        "2,1,1,1",
        "--point",
        "0.5,2,-1,3",
    ]));
    for l in one.lines().filter(|l| !l.starts_with('#')) {
        assert!(l.contains("1.000000000000e0 0.000000000000e0"), "{l}");
    }
    let inv = monopole(&[
        "state",
        "--phi",
        "r^-1",
        "--kappa",
        "1",
        "--delta",
        "1",
        "--point",
        "1,1.5,0.2,0",
    ]);
    assert!(inv.status.success());
    assert!(!stdout(&inv).contains("NaN"));
}

#[test]
fn state_rejects_bad_input() {
    assert_eq!(
        monopole(&["state", "--phi", "x1^0.5", "--kappa", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        monopole(&["state", "--phi", "x4", "--kappa", "0"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        monopole(&["state", "--phi", "x3", "--kappa", "1.5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        monopole(&["state", "--phi", "x3", "--kappa", "1", "--point", "1,2"])
            .status
            .code(),
        Some(2)
    );
}
