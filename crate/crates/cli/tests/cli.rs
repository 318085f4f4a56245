use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn dodecic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dodecic"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scan_to(out: &Path, format: &str, box_: [i64; 4]) -> Output {
    let [amin, amax, bmin, bmax] = box_.map(|v| v.to_string());
    dodecic(&[
        "scan",
        "--amin",
        &amin,
        "--amax",
        &amax,
        "--bmin",
        &bmin,
        "--bmax",
        &bmax,
        "--out",
        out.to_str().unwrap(),
        "--format",
        format,
    ])
}

#[test]
fn classify_examples() {
    let o = dodecic(&["classify", "--a", "-1", "--b", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("irreducible: true"));
    assert!(s.contains("monogenic: true"));
    assert!(s.contains("Gal(f): 12T2"));

    let o = dodecic(&["classify", "--a", "11", "--b", "33"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("monogenic: false (q = 3 divides the index, condition (3))"));

    let o = dodecic(&["classify", "--a", "1", "--b", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("irreducible: false"));
}

#[test]
fn classify_json() {
    let o = dodecic(&[
        "classify",
        "--a",
        "4",
        "--b",
        "-2",
        "--json",
        "--prime-bound",
        "1000",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["Gal_f"], "12T38");
    assert_eq!(v["monogenic"], true);
    assert_eq!(v["prediction"]["predicted_label"], "12T38");
    assert_eq!(v["prediction_agrees"], true);
    assert_eq!(v["discriminant_factorization"], "-2^35 * 3^18");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        dodecic(&["classify", "--a", "0", "--b", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        dodecic(&["classify", "--a", "x", "--b", "1"]).status.code(),
        Some(2)
    );
    assert_eq!(dodecic(&["classify", "--a", "1"]).status.code(), Some(2));
    assert_eq!(dodecic(&["verify", "--box", "0"]).status.code(), Some(2));
    assert_eq!(
        dodecic(&["oracle-check", "--box", "-3"]).status.code(),
        Some(2)
    );
    assert_eq!(
        dodecic(&["verify", "--box", "2", "--prime-bound", "10"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(dodecic(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        dodecic(&["classify", "--a", "1", "--b", "2", "--prime-bound", "5"])
            .status
            .code(),
        Some(2)
    );
    let o = scan_to(Path::new("/nonexistent/dir/out.csv"), "csv", [1, 2, 1, 2]);
    assert_eq!(o.status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let o = scan_to(&dir.path().join("x.csv"), "csv", [2, 1, 1, 2]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn scan_csv_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("box2.csv");
    let o = scan_to(&out, "csv", [-2, 2, -2, 2]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("12T2"));
    let text = fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("a,b,irreducible,G4,G6,Gal_f,monogenic,obstruction_prime,obstruction_condition,prediction_agrees")
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 16);
    assert!(rows.contains(&"-1,1,true,4T2,6T1,12T2,true,,,true"));
    assert!(rows
        .iter()
        .any(|r| r.starts_with("2,2,true,") && r.contains(",12T28,true,")));

    let out = dir.path().join("one.csv");
    assert_eq!(scan_to(&out, "csv", [4, 4, -2, -2]).status.code(), Some(0));
    let text = fs::read_to_string(&out).unwrap();
    assert!(text
        .lines()
        .nth(1)
        .unwrap()
        .starts_with("4,-2,true,4T3,6T9,12T38,true,"));
}

#[test]
fn empty_box_writes_only_the_header() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("empty.csv");
    let o = scan_to(&out, "csv", [0, 0, -3, 3]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&out).unwrap().lines().count(), 1);

    let out = dir.path().join("empty.json");
    assert_eq!(scan_to(&out, "json", [0, 0, -3, 3]).status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v, serde_json::json!([]));
}

#[test]
fn scan_json_rows() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("box.json");
    assert_eq!(scan_to(&out, "json", [-2, 2, -2, 2]).status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 16);
    let r = rows.iter().find(|r| r["a"] == -1 && r["b"] == 1).unwrap();
    assert_eq!(r["Gal_f"], "12T2");
    assert_eq!(r["G4"], "4T2");
    assert_eq!(r["obstruction_prime"], serde_json::Value::Null);
    let r = rows.iter().find(|r| r["a"] == 1 && r["b"] == 1).unwrap();
    assert_eq!(r["irreducible"], false);
    assert_eq!(r["monogenic"], serde_json::Value::Null);
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for format in ["csv", "json"] {
        let first = dir.path().join(format!("first.{format}"));
        let second = dir.path().join(format!("second.{format}"));
        assert_eq!(
            scan_to(&first, format, [-12, 12, -15, 15]).status.code(),
            Some(0)
        );
        let o = Command::new(env!("CARGO_BIN_EXE_dodecic"))
            .args(["--threads", "1"])
            .args([
                "scan",
                "--amin",
                "-12",
                "--amax",
                "12",
                "--bmin",
                "-15",
                "--bmax",
                "15",
                "--out",
                second.to_str().unwrap(),
                "--format",
                format,
            ])
            .output()
            .unwrap();
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(fs::read(&first).unwrap(), fs::read(&second).unwrap());
    }
}

#[test]
fn verify_small_boxes() {
    let o = dodecic(&["verify", "--box", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("PASS  12T39-monogenic f"));
    assert!(!s.contains("FAIL"));

    let o = dodecic(&["verify", "--box", "1"]);
    assert_eq!(o.status.code(), Some(0));

    let o = dodecic(&["verify", "--box", "12", "--prime-bound", "500"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn oracle_check_box() {
    let o = dodecic(&["oracle-check", "--box", "10"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains(" 0 mismatches"));
}
