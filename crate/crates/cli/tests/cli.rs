use std::path::Path;
use std::process::{Command, Output};

fn twistword(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_twistword")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn generate_prints_the_prefix() {
    let o = twistword(&["generate", "--N", "3", "--j", "1", "--seed", "a", "--length", "8"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "abbcbcca\n");
    let o = twistword(&["generate", "--N", "2", "--length", "8"]);
    assert_eq!(stdout(&o), "abbabaab\n");
}

#[test]
fn twist_example() {
    let o = twistword(&["twist", "--N", "3", "--j", "1", "--input-word", "ab"]);
    assert_eq!(stdout(&o), "bc\n");
    let o = twistword(&["twist", "--N", "3", "--j", "2", "--input-word", "ab"]);
    assert_eq!(stdout(&o), "ca\n");
}

#[test]
fn theorem_case_scan_is_free() {
    let o = twistword(&["scan", "--k", "3", "--j", "2", "--N", "3", "--length", "4096", "--m-max", "64"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "start\tm\tk\tj\tN");
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("# free within range"));
}

#[test]
fn excluded_case_row_format() {
    let o = twistword(&["scan", "--N", "3", "--j", "1", "--length", "9", "--m-max", "3"]);
    assert_eq!(stdout(&o).lines().nth(1), Some("6\t1\t3\t1\t3"));
    let naive = twistword(&["scan", "--N", "3", "--j", "1", "--length", "512", "--m-max", "32", "--algorithm", "naive"]);
    let fast = twistword(&["scan", "--N", "3", "--j", "1", "--length", "512", "--m-max", "32"]);
    let rows = |o: &Output| stdout(o).lines().filter(|l| !l.starts_with('#')).map(String::from).collect::<Vec<_>>();
    assert_eq!(rows(&naive), rows(&fast));
}

#[test]
fn invalid_configs_exit_with_2() {
    for args in [
        &["generate", "--N", "1", "--length", "3"][..],
        &["scan", "--N", "3", "--length", "10"][..],
        &["scan", "--N", "3", "--length", "10", "--m-max", "2", "--k", "1"][..],
        &["generate", "--N", "3", "--length", "4", "--seed", "d"][..],
        &["generate", "--N", "3", "--length", "4", "--sigma", "(0 1"][..],
        &["twist", "--N", "3", "--input-word", "abd"][..],
        &["complexity", "--N", "3", "--length", "100", "--window", "4"][..],
        &["nonsense"][..],
    ] {
        let o = twistword(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    let o = twistword(&["twist", "--N", "3", "--input-word", "abd"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--input-word"));
}

#[test]
fn missing_input_file_exits_with_1() {
    let o = twistword(&["scan", "--input", "/nonexistent/word.txt", "--m-max", "3"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn zero_j_warns() {
    let o = twistword(&["twist", "--N", "3", "--j", "3", "--input-word", "abc"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "abc\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn custom_sigma() {
    let o = twistword(&["generate", "--N", "3", "--sigma", "(0 2 1)", "--length", "8"]);
    assert_eq!(stdout(&o), "accbcbba\n");
}

#[test]
fn recheck_round_trip_tsv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let tsv = dir.path().join("scan.tsv");
    let json = dir.path().join("campaign.json");
    let o = twistword(&[
        "scan", "--N", "4", "--j", "1", "--length", "2048", "--m-max", "40",
        "--output", tsv.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let o = twistword(&["verify", "--recheck", tsv.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).contains(", 0 failed"));

    let o = twistword(&[
        "campaign", "--N", "3,4", "--j-policy", "all-j", "--length", "1024", "--m-max", "64",
        "--format", "json", "--no-timestamp", "--output", json.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let o = twistword(&["verify", "--recheck", json.to_str().unwrap(), "--format", "json", "--no-timestamp"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["body"]["failures"], 0);
    assert!(doc["body"]["rows"].as_u64().unwrap() > 0);
}

#[test]
fn recheck_flags_a_tampered_row() {
    let dir = tempfile::tempdir().unwrap();
    let tsv = dir.path().join("bad.tsv");
    std::fs::write(&tsv, "start\tm\tk\tj\tN\n6\t1\t3\t1\t3\n5\t1\t3\t1\t3\n").unwrap();
    let o = twistword(&["verify", "--recheck", tsv.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("6\t1\t3\t1\t3\t1"));
    assert!(stdout(&o).contains("5\t1\t3\t1\t3\t0"));
}

#[test]
fn word_files_in_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let text = dir.path().join("w.txt");
    std::fs::write(&text, "babbccab\n").unwrap();
    let o = twistword(&["scan", "--input", text.to_str().unwrap(), "--j", "1", "--m-max", "2"]);
    assert!(stdout(&o).contains("1\t2\t3\t1\t3"));

    let big = dir.path().join("w.bin");
    let len = (1usize << 20) + 3;
    let o = twistword(&["generate", "--N", "3", "--length", &len.to_string(), "--output", big.to_str().unwrap()]);
    assert!(o.status.success());
    let bytes = std::fs::read(&big).unwrap();
    assert_eq!(bytes.len(), 8 + len);
    assert_eq!(u64::from_le_bytes(bytes[..8].try_into().unwrap()), len as u64);
    assert_eq!(&bytes[8..16], &[0, 1, 1, 2, 1, 2, 2, 0]);
    let o = twistword(&["complexity", "--input", big.to_str().unwrap(), "--k-max", "5"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("k\tp(k)\tstable\n1\t3\t1\n2\t9\t1\n"));
    assert!(Path::new(&big).exists());
}

#[test]
fn audit_and_descend_run() {
    let o = twistword(&["audit3", "--N", "3", "--length", "1024"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("abb\t0\t0"));
    assert!(stdout(&o).contains("self_consistent=true"));
    let o = twistword(&["descend", "--N", "3", "--j", "1", "--length", "1024", "--m-max", "16", "--format", "json", "--no-timestamp"]);
    assert!(o.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc["body"]["reports"].as_array().unwrap().len() > 1);
}

#[test]
fn complexity_report_has_fit_and_entropy() {
    let o = twistword(&["complexity", "--N", "3", "--length", "16384", "--k-max", "32"]);
    let out = stdout(&o);
    assert!(out.contains("# fit window=[8,32]"));
    assert!(out.contains("conjectured_slope=2"));
    assert!(out.contains("# entropy_estimate="));
}

#[test]
fn timestamps_only_without_flag() {
    let o = twistword(&["scan", "--N", "3", "--length", "64", "--m-max", "4", "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc["generated_at"].is_string());
    assert_eq!(doc["tool_version"], env!("CARGO_PKG_VERSION"));
    assert_eq!(doc["params"]["subcommand"], "scan");
}
