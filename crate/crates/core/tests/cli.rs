use std::process::Command;

fn coinv(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_coinv")).args(args).output().unwrap()
}

#[test]
fn reruns_are_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let paths: Vec<String> =
        (0..2).map(|k| dir.path().join(format!("r{k}.json")).to_string_lossy().into_owned()).collect();
    for (path, workers) in paths.iter().zip(["1", "3"]) {
        let out = coinv(&["verify", "sw-monomial-basis", "--n", "3", "--workers", workers, "--out", path]);
        assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    }
    let a = std::fs::read(&paths[0]).unwrap();
    assert_eq!(a, std::fs::read(&paths[1]).unwrap());
    let rows: serde_json::Value = serde_json::from_slice(&a).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["pass"] == true && r["ms"] == 0));
}

#[test]
fn csv_report() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("r.csv");
    let out = coinv(&["verify", "staircase", "--n", "3", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let headers = reader.headers().unwrap().clone();
    assert_eq!(headers.iter().collect::<Vec<_>>(), ["check", "n", "instance", "expected", "actual", "pass", "ms"]);
    let records: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert!(records.iter().any(|r| &r[2] == "J={1,3}"));
    assert!(records.iter().all(|r| &r[5] == "true"));
}

#[test]
fn report_to_stdout() {
    let out = coinv(&["verify", "saito-AJ", "--n", "2"]);
    assert!(out.status.success());
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!(rows.as_array().unwrap().iter().all(|r| r["check"] == "saito-AJ"));
}

#[test]
fn unknown_suite_fails() {
    let out = coinv(&["verify", "no-such-suite"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("no-such-suite"));
}

#[test]
fn bad_prime_fails() {
    let out = coinv(&["verify", "char-poly-AJ", "--n", "2", "--prime", "9"]);
    assert!(!out.status.success());
}

#[test]
fn n_five_needs_exhaustive() {
    let out = coinv(&["verify", "sagan-swanson", "--n", "5"]);
    assert!(!out.status.success());
}

#[test]
fn show_running_example() {
    let out = coinv(&["show", "arrangement", "n=5; H:0-1,0-2,1-2,1-3,2-3,1-4,2-4,3-4,2-5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("southwest: true"));
    assert!(text.contains("h-sequence: (1,2,2,3,1)"));
    assert!(text.contains("hyperplanes: 9"));
}

#[test]
fn show_rejects_bad_spec() {
    let out = coinv(&["show", "arrangement", "n=2; H:0-7"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn list_names_every_suite() {
    let out = coinv(&["list"]);
    let text = String::from_utf8(out.stdout).unwrap();
    for name in ["staircase", "ss-J", "sagan-swanson", "cospan", "st-general"] {
        assert!(text.contains(name), "{name}");
    }
    assert_eq!(text.lines().count(), 12);
}
