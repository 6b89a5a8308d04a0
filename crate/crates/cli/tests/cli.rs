//! End-to-end runs of the `dessins` binary.

use serde_json::Value;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dessins")).args(args).output().expect("binary runs")
}

/// Exit code and parsed JSON report.
fn report(args: &[&str]) -> (i32, Value) {
    let out = run(args);
    let text = String::from_utf8(out.stdout).expect("UTF-8 output");
    let v = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: {e}\n{text}"));
    (out.status.code().expect("exit code"), v)
}

#[test]
fn unicellular_count_fifteen() {
    let (code, v) = report(&["unicellular", "count", "--ell", "15"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "unicellular count");
    let r = &v["result"];
    assert_eq!(r["ell"], 15);
    assert_eq!(r["total"], 15);
    let per: Vec<(u64, u64)> = r["per_lambda"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["lambda"].as_u64().unwrap(), t["count"].as_u64().unwrap()))
        .collect();
    assert_eq!(per, vec![(1, 4), (3, 2), (5, 6), (15, 3)]);
}

#[test]
fn psi_five_roots() {
    let (code, v) = report(&["sl2", "psi", "--n", "5", "--p-max", "19"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["coefficients"], serde_json::json!([5, 5, 1]));
    assert_eq!(r["roots"], serde_json::json!([{ "p": 11, "indices": [1, 5] }, { "p": 19, "indices": [2, 12] }]));
}

#[test]
fn quaternion_center_quotient_is_totally_branched() {
    let (code, v) =
        report(&["quotient", "classify", "--group", "quaternion:8", "--b", "xy", "--w", "y^-1", "--by", "center"]);
    assert_eq!(code, 0);
    let c = &v["result"]["covering"];
    assert_eq!(c["totally_branched"], true);
    assert_eq!(c["ram_points"], 6);
    assert_eq!(c["chi"], -2);
    assert_eq!(c["chi_quotient"], 2);
    assert_eq!(v["result"]["riemann_hurwitz"], true);
}

#[test]
fn dessin_report_fields() {
    let (code, v) = report(&["dessin", "info", "--group", "psl2:7", "--b", "[[0,1],[-1,0]]", "--w", "[[0,-1],[1,1]]"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["group_spec"], "psl2:7");
    assert_eq!(r["signature"], serde_json::json!([2, 3, 7]));
    assert_eq!(r["counts"]["edges"], 168);
    assert_eq!(r["chi"], -4);
    assert_eq!(r["genus"], 3);
    assert_eq!(r["hurwitz"], true);
    assert_eq!(r["unicellular"], false);
    assert_eq!(r["multiplicity"], 1);
}

#[test]
fn exit_codes() {
    let (code, v) = report(&["dessin", "info", "--group", "cyclic:x", "--b", "h", "--w", "h"]);
    assert_eq!((code, v["error"]["kind"].as_str(), v["error"]["offset"].as_u64()), (2, Some("parse"), Some(7)));
    let (code, v) = report(&["dessin", "info", "--group", "cyclic:5", "--b", "h", "--w", "hz"]);
    assert_eq!((code, v["error"]["offset"].as_u64()), (2, Some(1)));
    let (code, v) = report(&["unicellular", "count"]);
    assert_eq!((code, v["error"]["kind"].as_str()), (2, Some("usage")));
    let (code, v) = report(&["sl2", "criterion", "--q", "7", "--l", "2", "--m", "3", "--n", "7"]);
    assert_eq!((code, v["error"]["kind"].as_str()), (3, Some("precondition")));
    let (code, v) = report(&["dessin", "info", "--group", "cyclic:6", "--b", "h^2", "--w", "h^2"]);
    assert_eq!((code, v["error"]["kind"].as_str()), (3, Some("not_generating")));
    let (code, v) = report(&["--cap", "100", "dessin", "info", "--group", "sl2:7", "--b", "b", "--w", "w"]);
    assert_eq!((code, v["error"]["kind"].as_str()), (4, Some("cap_exceeded")));
    let (code, _) = report(&["verify", "all", "--id", "99"]);
    assert_eq!(code, 3);
}

#[test]
fn verify_single_criterion() {
    let (code, v) = report(&["verify", "all", "--id", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["passed"], true);
    assert_eq!(v["result"]["criteria"][0]["id"], 2);
}

#[test]
fn identical_invocations_are_byte_identical() {
    let args = ["--jobs", "4", "--format", "csv", "sl2", "orders", "--p-max", "60"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let args = ["unicellular", "enumerate", "--ell-max", "40"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
}

#[test]
fn csv_and_out_file() {
    let out = run(&["construct", "ha", "--p", "2", "--d", "2", "--ell", "3", "--format", "csv"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        text,
        "i,j,smooth,black_primitive,white_primitive\n0,1,false,false,true\n1,1,false,true,false\n2,1,true,true,true\n"
    );
    let path = std::env::temp_dir().join(format!("dessins-cli-test-{}.json", std::process::id()));
    let out = run(&["sl2", "smooth", "--p", "11", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(v["result"]["indices"], serde_json::json!([1, 5, 8]));
}

#[test]
fn schur_and_criterion_with_oracles() {
    let (code, v) = report(&["sl2", "criterion", "--q", "9", "--l", "3", "--m", "5", "--n", "5", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!((v["result"]["generated"].as_bool(), v["result"]["oracle"].as_bool()), (Some(false), Some(false)));
    let (code, v) = report(&["sl2", "schur", "--q", "7", "--l", "3", "--m", "7", "--n", "7", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["smooth_cover_exists"], true);
    assert_eq!(v["result"]["witness"]["sheets"], 2);
    let (code, v) = report(&["sl2", "schur", "--q", "9", "--l", "3", "--m", "5", "--n", "5"]);
    assert_eq!((code, v["error"]["kind"].as_str()), (3, Some("out_of_scope")));
}

#[test]
fn fibonacci_examples() {
    let (code, v) = report(&["sl2", "fibonacci", "--primes", "101,41,29,109"]);
    assert_eq!(code, 0);
    let orders: Vec<u64> = v["result"].as_array().unwrap().iter().map(|r| r["order"].as_u64().unwrap()).collect();
    assert_eq!(orders, vec![25, 20, 7, 54]);
}
