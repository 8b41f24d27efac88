use std::process::{Command, Output};

use serde_json::Value;

fn qpwalks(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qpwalks"))
        .args(args)
        .env_remove("QPWALKS_TRUNC")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = qpwalks(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    serde_json::from_str(&stdout(&full)).expect("valid JSON")
}

fn fails(args: &[&str]) -> String {
    let out = qpwalks(args);
    assert!(!out.status.success(), "{args:?} should fail");
    String::from_utf8(out.stderr).unwrap()
}

#[test]
fn list_counts() {
    for (args, rows) in [
        (&["list"][..], 79),
        (&["list", "--finite"], 23),
        (&["list", "--infinite"], 56),
        (&["list", "--order", "6"], 5),
        (&["list", "--order", "4"], 16),
        (&["list", "--order", "8"], 2),
    ] {
        let report = json(args);
        assert_eq!(report["payload"]["count"], rows, "{args:?}");
        assert_eq!(report["payload"]["rows"].as_array().unwrap().len(), rows);
        assert!(stdout(args).ends_with(&format!("{rows} models\n")));
    }
}

#[test]
fn tandem_group() {
    let text = stdout(&["group", "W,N,SE"]);
    assert!(text.contains("finite group of order 6"));
    for image in ["(x^-1*y, y)", "(y^-1, x^-1)", "(x, x*y^-1)"] {
        assert!(text.contains(image), "missing {image} in\n{text}");
    }
    let report = json(&["group", "W,N,SE"]);
    assert_eq!(report["payload"]["kind"], "finite");
    assert_eq!(report["payload"]["order"], 6);
    assert_eq!(report["payload"]["orbit"].as_array().unwrap().len(), 6);
}

#[test]
fn infinite_group_certificates() {
    // Fixed-point certificate, reached through a symmetry.
    let report = json(&["group", "N,SE,S,W"]);
    let payload = &report["payload"];
    assert_eq!(payload["kind"], "infinite_by_symmetry");
    assert_eq!(payload["base"]["kind"], "infinite_fixed_point");
    assert!(payload["base"]["chi_bar"]
        .as_str()
        .unwrap()
        .starts_with("X^8"));

    let kinds: Vec<String> = ["N,NE,S,W", "N,NE,SE,SW", "N,E,SE,W"]
        .iter()
        .map(|s| {
            json(&["group", s])["payload"]["kind"]
                .as_str()
                .unwrap()
                .to_string()
        })
        .collect();
    assert!(kinds.iter().all(|k| k.starts_with("infinite")), "{kinds:?}");
}

#[test]
fn bad_step_sets() {
    assert!(fails(&["group", "Q,Z"]).contains("unknown step"));
    assert!(fails(&["count", "X", "-n", "3"]).contains("unknown step"));
    assert!(fails(&["group", "N,E,SE"]).contains("not a quarter-plane model"));
}

#[test]
fn simple_walk_returns() {
    assert_eq!(
        stdout(&["count", "N,S,E,W", "-n", "8", "--at", "0,0"]),
        "1,0,2,0,10,0,70,0,588\n"
    );
}

#[test]
fn gessel_closed_form() {
    assert_eq!(
        stdout(&[
            "count",
            "E,W,NE,SW",
            "-n",
            "8",
            "--at",
            "0,0",
            "--method",
            "closed"
        ]),
        "1,0,2,0,11,0,85,0,782\n"
    );
}

#[test]
fn marginals_by_every_method() {
    // Gouyou-Beauchamps totals, ending heights and abscissas.
    for sel in [&["--total"][..], &["--row", "1"], &["--col", "2"]] {
        let mut args = vec!["count", "E,W,NW,SE", "-n", "10"];
        args.extend_from_slice(sel);
        let dp = stdout(&args);
        for method in ["orbit", "closed"] {
            let mut with = args.clone();
            with.extend_from_slice(&["--method", method]);
            assert_eq!(stdout(&with), dp, "{with:?}");
        }
    }
    assert!(stdout(&["count", "E,W,NW,SE", "-n", "3", "--total"]).ends_with(",6\n"));
}

#[test]
fn full_table_csv() {
    let text = stdout(&["count", "W,N,SE", "-n", "3"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,i,j,count"));
    assert_eq!(lines.next(), Some("0,0,0,1"));
    let rows: Vec<Vec<u64>> = lines
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect();
    // Tandem totals are Motzkin numbers.
    let total: u64 = rows.iter().filter(|r| r[0] == 3).map(|r| r[3]).sum();
    assert_eq!(total, 4);
}

#[test]
fn cross_check_runs_applicable_methods() {
    let report = json(&["count", "W,N,SE", "-n", "8", "--cross-check"]);
    let check = &report["payload"]["cross_check"];
    assert_eq!(check["agree"], true);
    assert_eq!(
        check["methods"],
        serde_json::json!(["dp", "orbit", "closed"])
    );

    let report = json(&["count", "W,S,NE", "-n", "9", "--at", "2,0", "--cross-check"]);
    let check = &report["payload"]["cross_check"];
    assert_eq!(check["methods"], serde_json::json!(["dp", "closed"]));
    assert_eq!(check["skipped"], serde_json::json!(["orbit"]));
}

#[test]
fn inapplicable_method_is_explained() {
    let err = fails(&["count", "W,S,NE", "-n", "5", "--method", "orbit"]);
    assert!(err.contains("orbit extraction does not apply"), "{err}");
    let err = fails(&[
        "count", "N,S,E,W", "-n", "5", "--total", "--method", "closed",
    ]);
    assert!(err.contains("no closed form"), "{err}");
}

#[test]
fn ceiling() {
    assert!(fails(&["count", "W,N,SE", "-n", "41", "--total"]).contains("ceiling 40"));
    let out = Command::new(env!("CARGO_BIN_EXE_qpwalks"))
        .args(["count", "W,N,SE", "--total"])
        .env("QPWALKS_TRUNC", "5")
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "1,1,2,4,9,21\n");
    let out = Command::new(env!("CARGO_BIN_EXE_qpwalks"))
        .args(["count", "W,N,SE", "-n", "6", "--total"])
        .env("QPWALKS_TRUNC", "5")
        .output()
        .unwrap();
    assert!(!out.status.success());
}

#[test]
fn verify_suites() {
    let text = stdout(&["verify", "table5"]);
    assert!(text.contains("fixed-points: 18/18 checks pass"), "{text}");
    let report = json(&["verify", "algebraic"]);
    assert_eq!(report["status"], "ok");
    let checks = report["payload"]["suites"][0]["checks"].as_array().unwrap();
    assert!(checks
        .iter()
        .any(|c| c["name"].as_str().unwrap().contains("quartic")));
    assert!(fails(&["verify", "nosuchsuite"]).contains("unknown suite"));
}

#[test]
fn reports_are_reproducible() {
    for args in [
        &["list", "--finite"][..],
        &["group", "N,NE,S,W"],
        &[
            "count",
            "E,W,NW,SE",
            "-n",
            "6",
            "--at",
            "1,1",
            "--cross-check",
        ],
        &["verify", "classification"],
    ] {
        let mut full = vec!["--json"];
        full.extend_from_slice(args);
        let first = stdout(&full);
        assert_eq!(first, stdout(&full), "{args:?}");
        let v: Value = serde_json::from_str(&first).unwrap();
        assert_eq!(v["schema_version"], 1);
        assert_eq!(v["command"][0], "--json");
    }
}
