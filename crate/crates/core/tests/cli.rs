use std::process::{Command, Output};

use serde_json::Value;

fn qzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qzeta")).args(args).env_remove("QZETA_GUARD").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_inert_m1_fraction_as_json() {
    let o = qzeta(&["compute", "coh-inert-m1", "--n", "1", "--format", "json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["target"], "coh-inert-m1");
    assert_eq!(v["var"], "qinv");
    assert_eq!(v["value"]["kind"], "fraction");
    let num: Vec<(i64, i64)> = v["value"]["num"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["e_q"].as_i64().unwrap(), r["e_t"].as_i64().unwrap()))
        .collect();
    // 1 + q^-1 t + q^-1 t^2, exponents recorded in q^-1
    assert_eq!(num, [(0, 0), (1, 1), (1, 2)]);
    assert_eq!(v["display"], "(1 + q^-1*t + q^-1*t^2) / (q^-2*t^2; q^-2)_1");
}

#[test]
fn var_flag_only_changes_records() {
    let native = qzeta(&["compute", "coh-inert-m1", "--n", "1", "--format", "json"]);
    let q = qzeta(&["compute", "coh-inert-m1", "--n", "1", "--format", "json", "--var", "q"]);
    let (a, b): (Value, Value) = (serde_json::from_slice(&native.stdout).unwrap(), serde_json::from_slice(&q.stdout).unwrap());
    assert_eq!(a["display"], b["display"]);
    assert_eq!(b["value"]["num"][1]["e_q"], -1);
}

#[test]
fn compute_text_examples() {
    let o = qzeta(&["compute", "nuhat0", "--family", "split", "--m", "2", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "1\n");
    assert_eq!(stdout(&qzeta(&["compute", "g-skew", "--r", "2", "--s", "1"])), "1 + q\n");
}

#[test]
fn oracle_sat_count() {
    let o = qzeta(&["oracle", "sat-count", "--q", "2", "--n", "1", "--r", "1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn oracle_csv_has_versioned_header() {
    let o = qzeta(&["--format", "csv", "--no-timing", "oracle", "sat-zeta", "--family", "inert", "--m", "1", "--n", "1", "--q", "2"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("version,target,"));
    assert!(lines.next().unwrap().contains("1;3"));
}

#[test]
fn verify_conjectural_suite() {
    let o = qzeta(&["verify", "conj-m1", "--n-max", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("conjectural"));
}

#[test]
fn verify_rogers_ramanujan_identities() {
    let o = qzeta(&["verify", "corollary-rr", "--order", "50"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["--format", "json", "--no-timing", "verify", "hall"];
    let a = qzeta(&args);
    let b = qzeta(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let args = ["--format", "csv", "--no-timing", "oracle", "hall-table", "--lambda", "2,1", "--q", "3"];
    assert_eq!(qzeta(&args).stdout, qzeta(&args).stdout);
}

#[test]
fn guard_exceeded_exits_3() {
    let o = Command::new(env!("CARGO_BIN_EXE_qzeta"))
        .args(["oracle", "hall-count", "--lambda", "2,1", "--mu", "1", "--q", "2"])
        .env("QZETA_GUARD", "1")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    let o = qzeta(&["--guard", "1", "verify", "sat-oracle"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["compute", "no-such-target"][..],
        &["frobnicate"],
        &["compute", "nuhat0", "--family", "split", "--m", "0", "--n", "1"],
        &["verify", "no-such-suite"],
    ] {
        let o = qzeta(args);
        assert_eq!(o.status.code(), Some(64), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn compute_csv_lists_numerator_and_denominator() {
    let o = qzeta(&["--format", "csv", "compute", "coh-inert-m1", "--n", "1", "--var", "q"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows[0], "version,part,e_q,e_t,coeff,step,len");
    assert_eq!(rows[1..], ["1,num,0,0,1,,", "1,num,-1,1,1,,", "1,num,-1,2,1,,", "1,den,-2,2,1,-2,1"]);
}
