//! End-to-end tests against the built binary: exact bytes, exit codes, and
//! the JSON round-trip back to joint distributions.

use std::collections::BTreeMap;
use std::process::{Command, Output};

use compgf::engine::CompositionClass;
use compgf::oracle;
use compgf::partsets::parse_set;

fn compgf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_compgf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = compgf(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    compgf(args).status.code().expect("exit code")
}

#[test]
fn gf_prints_canonical_series() {
    assert_eq!(
        stdout_of(&["gf", "--class", "compositions", "--set", "1", "--n-max", "2"]),
        "1 + x*y + x^2*y^2*l\n"
    );
    assert_eq!(
        stdout_of(&[
            "gf",
            "--class",
            "compositions",
            "--set",
            "N",
            "--n-max",
            "3",
            "--at",
            "y=1,r=1,l=1,d=1"
        ]),
        "1 + x + 2*x^2 + 4*x^3\n"
    );
    let carlitz = stdout_of(&["gf", "--class", "carlitz", "--set", "1,2", "--n-max", "3"]);
    assert!(carlitz.contains("x^3*y^2*r"));
    assert!(carlitz.contains("x^3*y^2*d"));
}

#[test]
fn table_csv_has_fixed_columns() {
    assert_eq!(
        stdout_of(&[
            "table",
            "--class",
            "palindromes",
            "--set",
            "N",
            "--stat",
            "count",
            "--n-max",
            "6",
            "--format",
            "csv"
        ]),
        "n,value\n0,1\n1,1\n2,2\n3,2\n4,4\n5,4\n6,8\n"
    );
    assert_eq!(
        stdout_of(&[
            "table",
            "--class",
            "partitions",
            "--set",
            "1,2",
            "--stat",
            "drops",
            "--n-max",
            "5",
            "--format",
            "csv"
        ]),
        "n,value\n0,0\n1,0\n2,0\n3,1\n4,1\n5,2\n"
    );
    // one-letter alphabet has no rises at all
    assert_eq!(
        stdout_of(&[
            "table",
            "--class",
            "compositions",
            "--set",
            "1",
            "--stat",
            "rises",
            "--n-max",
            "5",
            "--format",
            "csv"
        ]),
        "n,value\n0,0\n1,0\n2,0\n3,0\n4,0\n5,0\n"
    );
    let joint = stdout_of(&[
        "table", "--class", "compositions", "--set", "1,2", "--stat", "joint", "--n-max", "3",
        "--format", "csv",
    ]);
    assert!(joint.starts_with("n,m,rises,levels,drops,count\n"));
    assert!(joint.contains("3,3,0,2,0,1\n"));
}

#[test]
fn json_joint_table_round_trips() {
    let body = stdout_of(&[
        "table", "--class", "carlitz", "--set", "1,3", "--stat", "joint", "--n-max", "9",
        "--format", "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&body).unwrap();
    assert!(doc.get("query").is_some());
    assert!(doc.get("verdicts").unwrap().as_array().unwrap().is_empty());

    let mut parsed: BTreeMap<usize, BTreeMap<[u32; 4], u64>> = BTreeMap::new();
    for row in doc["rows"].as_array().unwrap() {
        let n = row["n"].as_u64().unwrap() as usize;
        let key = [
            row["m"].as_u64().unwrap() as u32,
            row["rises"].as_u64().unwrap() as u32,
            row["levels"].as_u64().unwrap() as u32,
            row["drops"].as_u64().unwrap() as u32,
        ];
        *parsed.entry(n).or_default().entry(key).or_insert(0) += row["count"].as_u64().unwrap();
    }

    let set = parse_set("1,3").unwrap();
    for n in 0..=9 {
        let expected = oracle::joint_distribution(CompositionClass::Carlitz, &set, n).counts;
        let got = parsed.remove(&n).unwrap_or_default();
        assert_eq!(got, expected, "n = {n}");
    }
    assert!(parsed.is_empty());
}

#[test]
fn identical_queries_give_identical_bytes() {
    let args = [
        "check",
        "--suite",
        "identities",
        "--n-max",
        "6",
        "--format",
        "json",
    ];
    assert_eq!(stdout_of(&args), stdout_of(&args));
}

#[test]
fn check_suites_exit_zero() {
    assert_eq!(exit_code(&["check", "--suite", "oracle", "--n-max", "8"]), 0);
    assert_eq!(exit_code(&["check", "--suite", "paths", "--n-max", "8"]), 0);
    assert_eq!(exit_code(&["check", "--suite", "catalog", "--n-max", "12"]), 0);
}

#[test]
fn catalog_check_reports_expected_mismatches() {
    let body = stdout_of(&["check", "--suite", "catalog", "--n-max", "12"]);
    assert!(body.contains("comp.rises.gf[odd] -- mismatch(first degree 6) [expected mismatch]"));
    assert!(body.contains("pal.levels.gf[1,2] -- mismatch(first degree 3) [expected mismatch]"));
    assert!(body.ends_with("failures: PASS\n"));
}

#[test]
fn usage_errors_exit_two() {
    // malformed set
    assert_eq!(
        exit_code(&["table", "--class", "compositions", "--set", "0", "--stat", "count", "--n-max", "4"]),
        2
    );
    // statistic identically zero on the class
    assert_eq!(
        exit_code(&["table", "--class", "carlitz", "--set", "1,2", "--stat", "levels", "--n-max", "4"]),
        2
    );
    // joint cannot be sliced
    assert_eq!(
        exit_code(&["table", "--class", "compositions", "--set", "N", "--stat", "joint", "--n-max", "4", "--parts", "2"]),
        2
    );
    // over the runtime ceiling
    assert_eq!(
        exit_code(&["table", "--class", "compositions", "--set", "N", "--stat", "count", "--n-max", "99"]),
        2
    );
    // unknown flag and missing required flags
    assert_eq!(exit_code(&["table", "--whatever"]), 2);
    // csv has no meaning for gf or check
    assert_eq!(
        exit_code(&["gf", "--class", "compositions", "--set", "N", "--n-max", "4", "--format", "csv"]),
        2
    );
    assert_eq!(
        exit_code(&["check", "--suite", "paths", "--format", "csv"]),
        2
    );
    // bad --at assignments
    assert_eq!(
        exit_code(&["gf", "--class", "compositions", "--set", "N", "--n-max", "4", "--at", "q=1"]),
        2
    );
    assert_eq!(
        exit_code(&["gf", "--class", "compositions", "--set", "N", "--n-max", "4", "--at", "y=half"]),
        2
    );
}

#[test]
fn ceiling_is_configurable() {
    assert_eq!(
        exit_code(&[
            "--ceiling", "60", "table", "--class", "compositions", "--set", "2,3", "--stat",
            "count", "--n-max", "45", "--format", "csv"
        ]),
        0
    );
}

#[test]
fn per_parts_tables_slice_the_series() {
    // rises among 2-part compositions over N start 0,0,0,1,1,2 (n <= 5)
    assert_eq!(
        stdout_of(&[
            "table", "--class", "compositions", "--set", "N", "--stat", "rises", "--n-max", "5",
            "--parts", "2", "--format", "csv"
        ]),
        "n,value\n0,0\n1,0\n2,0\n3,1\n4,1\n5,2\n"
    );
    // 2-part palindromes are (a,a): counts 0,0,1,0,1,0,1
    assert_eq!(
        stdout_of(&[
            "table", "--class", "palindromes", "--set", "N", "--stat", "count", "--n-max", "6",
            "--parts", "2", "--format", "csv"
        ]),
        "n,value\n0,0\n1,0\n2,1\n3,0\n4,1\n5,0\n6,1\n"
    );
}
