use std::process::{Command, Output};

fn qident(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qident"))
        .args(args)
        .env_remove("QIDENT_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_values() {
    let o = qident(&["compute", "qbinom", "4", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "1 + q + 2*q^2 + q^3 + q^4");
    assert_eq!(
        stdout(&qident(&["compute", "pd", "7", "2", "5", "2"])).trim(),
        "2"
    );
    assert_eq!(stdout(&qident(&["compute", "cc4", "3"])).trim(), "-2");
    assert_eq!(stdout(&qident(&["compute", "cc6", "-1"])).trim(), "1/2");
    assert_eq!(
        stdout(&qident(&["compute", "A", "1", "1", "6", "1"])).trim(),
        "1 + q + q^2"
    );
    assert_eq!(
        stdout(&qident(&["compute", "qbinom", "3", "-1"])).trim(),
        "0"
    );
}

#[test]
fn compute_domain_errors_exit_2() {
    assert_eq!(
        qident(&["compute", "pd", "3", "0", "4", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qident(&["compute", "A", "0", "1", "6", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qident(&["compute", "qbinom", "x", "1"]).status.code(),
        Some(2)
    );
}

#[test]
fn series_verdicts() {
    let o = qident(&["series", "L3", "--order", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("lhs: 1 1 2 2 4"), "{text}");
    assert!(text.contains("verdict: equal"));
    let o = qident(&["series", "PRODID", "--order", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: equal"));
    let o = qident(&["series", "L1", "--order", "0"]);
    assert!(stdout(&o).contains("lhs: 1\n"));
    assert_eq!(qident(&["series", "L9"]).status.code(), Some(2));
    assert_eq!(
        qident(&["series", "L1", "--order", "61"]).status.code(),
        Some(2)
    );
}

#[test]
fn verify_all_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.json");
    let o = qident(&[
        "verify",
        "all",
        "--n",
        "1..4",
        "--m",
        "0..6",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert!(report["summary"]["pass"].as_u64().unwrap() > 400);
    let first = &report["results"][0];
    for key in [
        "id", "n", "m", "order", "status", "lhs", "rhs", "diff", "ms",
    ] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn exploratory_mismatches_keep_exit_zero() {
    let o = qident(&[
        "verify",
        "T5-literal",
        "--n",
        "1..1",
        "--m",
        "0..1",
        "--format",
        "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["summary"]["exploratory"], 2);
    let results = report["results"].as_array().unwrap();
    assert_eq!(results.len(), 2);
    assert!(results
        .iter()
        .all(|r| r["status"] == "exploratory-mismatch"));
    assert_eq!(results[0]["diff"], serde_json::json!([[0, "1"]]));
    assert_eq!(results[1]["diff"], serde_json::json!([[0, "1"], [6, "-1"]]));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(qident(&["verify", "BOGUS"]).status.code(), Some(2));
    let o = qident(&["verify", "BOGUS"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("T5-literal"));
    assert_eq!(
        qident(&["verify", "T1", "--n", "4..1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        qident(&["verify", "T1", "--jobs", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(qident(&["frobnicate"]).status.code(), Some(2));
    let o = qident(&["verify", "T1", "--json", "/nonexistent-dir/out.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn negative_m_ranges_parse() {
    let o = qident(&[
        "verify", "T1,T4", "--n", "0..8", "--m", "-16..12", "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(report["summary"]["pass"], 189 + 181);
}

#[test]
fn reports_are_identical_across_job_counts() {
    let args = [
        "verify", "all", "--n", "1..3", "--m", "0..5", "--order", "12", "--format", "json",
    ];
    let base = qident(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(base.status.code(), Some(0));
    for jobs in ["2", "4", "7"] {
        let other = qident(&[&args[..], &["--jobs", jobs]].concat());
        assert_eq!(other.stdout, base.stdout, "--jobs {jobs}");
    }
    let env = Command::new(env!("CARGO_BIN_EXE_qident"))
        .args(args)
        .env("QIDENT_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(env.stdout, base.stdout);
    let bad_env = Command::new(env!("CARGO_BIN_EXE_qident"))
        .args(["verify", "T1"])
        .env("QIDENT_JOBS", "many")
        .output()
        .unwrap();
    assert_eq!(bad_env.status.code(), Some(2));
}

#[test]
fn list_names_every_case() {
    let text = stdout(&qident(&["list"]));
    for id in ["T1", "T5-literal", "PRODID", "FILTER6B"] {
        assert!(text.lines().any(|l| l.starts_with(id)), "{id}");
    }
}
