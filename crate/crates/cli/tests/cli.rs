use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn hextree(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hextree"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary starts");
    {
        let mut pipe = child.stdin.take().expect("stdin is piped");
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).expect("stdin accepts input");
        }
    }
    child.wait_with_output().expect("binary finishes")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn ok(args: &[&str]) -> String {
    let o = hextree(args, None);
    assert!(o.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

const CHAIN_TOP_RED: &str = r#"{"kind":"marked","children":[{"kind":"marked","mark":"red","children":[
    {"kind":"marked","mark":"plain","children":[{"kind":"marked","mark":"plain","children":[]}]}]}]}"#;

#[test]
fn count_hex_csv_column() {
    let text = ok(&["count", "hex", "--n", "0..9", "--format", "csv"]);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("family,n,count"));
    let column: Vec<&str> = lines.map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(column, ["1", "1", "3", "10", "36", "137", "543", "2219", "9285", "39587"]);
}

#[test]
fn skew_round_trip_of_drawn_chain() {
    let o = hextree(&["biject", "skew", "--roundtrip", "--input", "-"], Some(CHAIN_TOP_RED));
    assert!(o.status.success());
    let report: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(report["word"], "UUUDDL");
    assert_eq!(report["roundtrip"], "ok");
}

#[test]
fn oeis_check_reports_ok() {
    assert_eq!(ok(&["oeis", "--check", "--terms", "14"]).trim(), "ok");
    let listed = ok(&["oeis", "--terms", "4"]);
    assert_eq!(listed, "n,count\n0,1\n1,1\n2,3\n3,10\n");
}

#[test]
fn usage_errors_exit_with_two() {
    for args in [
        &["count", "heptagon", "--n", "3"][..],
        &["count", "hex", "--n", "3", "--frobnicate"],
        &["count", "hex", "--n", "9..2"],
        &["count", "hex", "--n", "3", "--colours", "2"],
        &["oeis", "--check", "--terms", "15"],
        &["stats", "leaves", "--n", "0..3"],
        &["asym", "height", "--n", "0"],
        &["stats", "leaves", "--height", "2"],
        &["frobnicate"],
    ] {
        let o = hextree(args, None);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?} printed no message");
    }
}

#[test]
fn validation_failures_exit_with_one() {
    let bad =
        r#"{"kind":"unary","colour":3,"children":[{"kind":"binary","children":[{"kind":"empty"},{"kind":"empty"}]}]}"#;
    let o = hextree(&["validate", "--colours", "2"], Some(bad));
    assert_eq!(o.status.code(), Some(1));
    let report: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(report["valid"], false);

    let o = hextree(&["validate", "--colours", "3"], Some(bad));
    assert_eq!(o.status.code(), Some(0));

    let leaf_red = r#"{"kind":"marked","children":[{"kind":"marked","mark":"red","children":[]}]}"#;
    let o = hextree(&["biject", "skew"], Some(leaf_red));
    assert_eq!(o.status.code(), Some(1));

    let o = hextree(&["biject", "dyck", "--inverse"], Some("{not json"));
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn generated_objects_survive_every_round_trip() {
    for (family, n, bijection) in
        [("multi_edge", "5", "ub"), ("multi_edge", "5", "motzkin3"), ("marked", "5", "skew"), ("ordered", "4", "dyck")]
    {
        let objects = ok(&["gen", family, "--n", n]);
        let expected = ok(&["count", family, "--n", n]);
        let expected: usize = expected.lines().nth(1).unwrap().rsplit(',').next().unwrap().parse().unwrap();
        assert_eq!(objects.lines().count(), expected, "{family}");
        let o = hextree(&["biject", bijection, "--roundtrip"], Some(&objects));
        assert!(o.status.success(), "{bijection}: {}", String::from_utf8_lossy(&o.stderr));
        for line in stdout(&o).lines() {
            let report: Value = serde_json::from_str(line).unwrap();
            assert_eq!(report["roundtrip"], "ok");
        }
    }
}

#[test]
fn inverse_direction_and_array_input() {
    let input = r#"[{"family":"motzkin3","steps":["Hb","Hb"]},{"family":"motzkin3","steps":["U","D"]}]"#;
    let o = hextree(&["biject", "motzkin3", "--inverse", "--roundtrip"], Some(input));
    assert!(o.status.success());
    let lines: Vec<Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[0]["image"]["children"][0]["weight"], 3);
    assert!(lines.iter().all(|r| r["roundtrip"] == "ok"));
}

#[test]
fn json_outputs_parse() {
    for args in [
        &["count", "ub", "--colours", "2", "--n", "0..6", "--format", "json"][..],
        &["series", "marked", "--order", "12"],
        &["register", "dist", "--n", "1..6", "--format", "json"],
        &["register", "mean", "--n", "1..6", "--colours", "0", "--format", "json"],
        &["stats", "leaves", "--n", "1..6", "--format", "json"],
        &["stats", "height", "--n", "1..6", "--format", "json"],
        &["stats", "height", "--height", "3", "--order", "8", "--format", "json"],
        &["asym", "count", "--n", "10..12", "--compare-exact", "--format", "json"],
        &["asym", "register", "--n", "50", "--terms", "3", "--format", "json"],
        &["oeis", "--check", "--format", "json"],
    ] {
        let text = ok(args);
        let value: Value = serde_json::from_str(text.trim()).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert!(value.is_array() || value.is_object(), "{args:?}");
    }
}

#[test]
fn big_counts_are_decimal_strings() {
    let text = ok(&["count", "hex", "--n", "60", "--format", "json"]);
    let rows: Value = serde_json::from_str(text.trim()).unwrap();
    let count = rows[0]["count"].as_str().expect("string count");
    assert!(count.len() > 30 && count.bytes().all(|b| b.is_ascii_digit()));
}

fn catalan(n: u64) -> u128 {
    (0..n).fold(1u128, |c, k| c * 2 * (2 * k as u128 + 1) / (k as u128 + 2))
}

#[test]
fn motzkin2_series_is_shifted_catalan() {
    let text = ok(&["series", "motzkin2", "--order", "15"]);
    let coeffs: Vec<String> = serde_json::from_str(text.trim()).unwrap();
    let expected: Vec<String> = (1..=16).map(|n| catalan(n).to_string()).collect();
    assert_eq!(coeffs, expected);
}

#[test]
fn output_is_deterministic_across_job_counts() {
    let one = ok(&["register", "mean", "--n", "1..30", "--colours", "2", "--jobs", "1"]);
    let many = ok(&["register", "mean", "--n", "1..30", "--colours", "2", "--jobs", "5"]);
    assert_eq!(one, many);
    assert_eq!(one, ok(&["register", "mean", "--n", "1..30", "--colours", "2"]));
    let leaves = ok(&["asym", "leaves", "--n", "1..20", "--compare-exact", "--jobs", "3"]);
    assert_eq!(leaves, ok(&["asym", "leaves", "--n", "1..20", "--compare-exact"]));
}

#[test]
fn gen_respects_limit_across_sizes() {
    let text = ok(&["gen", "dyck", "--n", "1..4", "--limit", "4"]);
    let words: Vec<String> = text
        .lines()
        .map(|l| {
            let v: Value = serde_json::from_str(l).unwrap();
            v["steps"].as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_owned()).collect()
        })
        .collect();
    let lengths: Vec<usize> = words.iter().map(String::len).collect();
    assert_eq!(lengths, [2, 4, 4, 6]);
    assert_eq!(words[0], "UD");
}

#[test]
fn register_distribution_sums_to_count() {
    let dist = ok(&["register", "dist", "--n", "7", "--colours", "3"]);
    let total: u64 = dist.lines().skip(1).map(|l| l.split(',').nth(2).unwrap().parse::<u64>().unwrap()).sum();
    let count = ok(&["count", "ub", "--colours", "3", "--n", "7"]);
    assert_eq!(count.lines().nth(1).unwrap(), format!("ub:3,7,{total}"));
}
