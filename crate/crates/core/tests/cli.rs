use std::process::{Command, Output};

use ltfourier::verify::{sha256_hex, PRECISION_ENV};
use serde_json::Value;

fn ltfourier(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ltfourier"))
        .args(args)
        .env_remove(PRECISION_ENV)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

/// Every number in the output is an integer; rationals are `{num, den}`.
fn assert_no_reals(v: &Value) {
    match v {
        Value::Number(n) => {
            let s = n.to_string();
            assert!(!s.contains(['.', 'e', 'E']), "approximate number {s}");
        }
        Value::Array(xs) => xs.iter().for_each(assert_no_reals),
        Value::Object(m) => m.values().for_each(assert_no_reals),
        _ => {}
    }
}

#[test]
fn passing_suite_exits_zero() {
    let o = ltfourier(&["verify", "--suite", "thm47", "--p", "3", "--deg", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).contains("0 failures"));
}

#[test]
fn failing_suite_exits_one() {
    // identities cannot be asserted beyond the working precision
    let o = ltfourier(&[
        "verify", "--suite", "lemma46", "--p", "3", "--deg", "2", "--assert", "100", "--prec", "64",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("first failure:"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["verify", "--suite", "bogus", "--p", "3"][..],
        &["field", "--p", "4"],
        &["field", "--p", "3", "--no-such-flag"],
        &["field"],
        &["verify", "--suite", "lemma32", "--p", "3", "--frobenius", "additive"],
    ] {
        let o = ltfourier(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn constants_of_unramified_quadratic() {
    let o = ltfourier(&["constants", "--p", "3", "--f", "2", "--e", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for line in ["s = 3/8", "torsion radius exponent = 1/8", "preimage threshold = 9/8"] {
        assert!(out.lines().any(|l| l == line), "missing {line:?} in\n{out}");
    }
}

#[test]
fn json_output_is_exact() {
    for args in [
        &["field", "--p", "2", "--e", "2", "--json"][..],
        &["constants", "--p", "5", "--json"],
        &["ltgroup", "--p", "2", "--trunc", "6", "--emit", "log", "--json"],
        &["verify", "--suite", "lemma32", "--p", "2", "--json"],
        &["mahler", "--p", "3", "--expand", "x^3", "--json"],
    ] {
        let o = ltfourier(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}");
        assert_no_reals(&json(&o));
    }
    let v = json(&ltfourier(&["verify", "--suite", "lemma32", "--p", "2", "--json"]));
    let cases = v["cases"].as_array().unwrap();
    assert!(!cases.is_empty());
    assert!(cases.iter().all(|c| c["holds"] == Value::Bool(true)));
}

#[test]
fn multiplicative_mahler_coefficients_are_differences() {
    let o = ltfourier(&["mahler", "--p", "3", "--frobenius", "multiplicative", "--expand", "x^2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    // x^2 = 0·C(x,0) + 1·C(x,1) + 2·C(x,2)
    assert!(out.lines().any(|l| l == "c_0 = 0"), "{out}");
    assert!(out.contains("c_1 = (1 + O(3^"), "{out}");
    assert!(out.contains("c_2 = (2 + O(3^"), "{out}");
    assert!(out.contains("reconstruction matches"));
}

#[test]
fn config_file_is_overridden_by_flags() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    std::fs::write(&path, "# quadratic unramified\np = 3\nf = 2\n").unwrap();
    let conf = path.to_str().unwrap();

    let o = ltfourier(&["constants", "--config", conf]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l == "s = 3/8"));

    let o = ltfourier(&["constants", "--config", conf, "--f", "1"]);
    assert!(stdout(&o).lines().any(|l| l == "s = 0"));

    std::fs::write(&path, "colour = red\n").unwrap();
    assert_eq!(ltfourier(&["constants", "--config", conf]).status.code(), Some(2));
}

#[test]
fn environment_sets_default_precision_only() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_ltfourier"));
        cmd.args(["field", "--p", "3", "--json"])
            .args(extra)
            .env_remove(PRECISION_ENV);
        if let Some(v) = env {
            cmd.env(PRECISION_ENV, v);
        }
        let v: Value = serde_json::from_slice(&cmd.output().unwrap().stdout).unwrap();
        v["field"]["precision"].as_u64().unwrap()
    };
    assert_eq!(run(Some("40"), &[]), 40);
    assert_eq!(run(Some("40"), &["--prec", "50"]), 50);
    assert_eq!(run(None, &[]), 64);
}

#[test]
fn json_output_is_byte_identical_across_runs() {
    let args = [
        "verify", "--suite", "lemma42", "--p", "2", "--f", "2", "--mmax", "6", "--json",
    ];
    let a = ltfourier(&args);
    let b = ltfourier(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(sha256_hex(&a.stdout), sha256_hex(&b.stdout));
}

#[test]
fn manifest_replay() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("manifest.json");
    let m = path.to_str().unwrap();

    let o = ltfourier(&[
        "verify",
        "--suite",
        "constants",
        "--p",
        "2",
        "--e",
        "2",
        "--manifest-out",
        m,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(ltfourier(&["verify", "--replay", m]).status.code(), Some(0));

    let mut manifest: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    manifest["results"]["cases"][0]["holds"] = Value::Bool(false);
    std::fs::write(&path, serde_json::to_string(&manifest).unwrap()).unwrap();
    assert_eq!(ltfourier(&["verify", "--replay", m]).status.code(), Some(1));
}

#[test]
fn in_process_entry_point() {
    let mut out = Vec::new();
    let code = ltfourier::cli::run_with(["ltfourier", "constants", "--p", "3", "--f", "2"], &mut out);
    assert_eq!(code, 0);
    assert!(String::from_utf8(out).unwrap().contains("s = 3/8"));
}
