use std::path::Path;
use std::process::{Command, Output};

use epi_core::verifier::VerificationReport;

fn epi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_epi"))
        .args(args)
        .env_remove("EPI_OUTPUT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn list_shows_the_catalog() {
    let o = epi(&["list"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    assert!(text.lines().count() >= 18);
    for id in ["thm3", "conj5", "composite_e", "brothers_limit"] {
        assert!(text.lines().any(|l| l.starts_with(id)), "{id}");
    }
    let gardner = text.lines().find(|l| l.starts_with("gardner_false")).unwrap();
    assert!(gardner.contains("negative_control"));
}

#[test]
fn list_json_is_an_array_of_entries() {
    let o = epi(&["list", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let arr = v.as_array().unwrap();
    assert!(arr.len() >= 18);
    for entry in arr {
        for key in ["id", "name", "status", "paper_anchor", "params"] {
            assert!(entry.get(key).is_some(), "{key} missing in {entry}");
        }
    }
}

#[test]
fn verify_exit_codes() {
    let o = epi(&["verify", "thm2", "--x", "1", "--digits", "50", "--terms", "40"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verdict         pass"));

    let o = epi(&["verify", "conj1", "--m", "3", "--digits", "40", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let r: VerificationReport = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.status.to_string(), "conjecture");
    assert_eq!(r.verdict.to_string(), "pass");

    // A negative control failing is the expected outcome.
    assert_eq!(code(&epi(&["verify", "gardner_false"])), 0);

    // Asking for more digits than forty terms deliver is a verification failure.
    assert_eq!(
        code(&epi(&["verify", "thm2", "--digits", "50", "--threshold", "45"])),
        1
    );
    // Too few terms to decide.
    assert_eq!(code(&epi(&["verify", "conj2", "--terms", "4"])), 1);

    for bad in [
        &["verify", "no_such_id"][..],
        &["verify", "thm2", "--digits", "9"],
        &["verify", "thm2", "--terms", "3"],
        &["verify", "thm2", "--x", "5000"],
        &["verify", "thm3", "--m", "1"],
        &["verify"],
        &["frobnicate"],
    ] {
        assert_eq!(code(&epi(bad)), 2, "{bad:?}");
    }
}

#[test]
fn scans() {
    let o = epi(&["scan", "conj1", "--m", "0..8"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("9/9 pass"), "{}", stdout(&o));
    let o = epi(&["scan", "thm1", "--x", "0..3"]);
    assert!(stdout(&o).contains("4/4 pass"));
    let o = epi(&["scan", "thm5", "--n", "1..4", "--x", "1"]);
    assert_eq!(code(&o), 0);
    let o = epi(&["scan", "thm1", "--x", "-2..-1"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert_eq!(code(&epi(&["scan", "conj1", "--m", "5..4"])), 2);
    assert_eq!(code(&epi(&["scan", "conj1", "--m", "3"])), 2);
    assert_eq!(code(&epi(&["scan", "conj1", "--m", "a..b"])), 2);
}

#[test]
fn dumps() {
    let text = stdout(&epi(&["dump", "pascal", "--rows", "8"]));
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 9);
    assert_eq!(rows[7].trim(), "7 1 7 21 35 35 21 7 1");

    let text = stdout(&epi(&["dump", "sequence", "--x", "2", "--from", "-6", "--to", "6"]));
    let values: Vec<i64> = text
        .lines()
        .map(|l| l.split_whitespace().nth(1).unwrap().parse().unwrap())
        .collect();
    let want = [-19, 12, -7, 5, -2, 3, 1, 4, 5, 9];
    assert!(values.windows(want.len()).any(|w| w == want), "{values:?}");

    let text = stdout(&epi(&["dump", "fib_poly", "--k", "5"]));
    assert!(text.lines().last().unwrap().ends_with("x^4 + 3x^2 + 1"));

    let text = stdout(&epi(&["dump", "lucas_triangle", "--rows", "3", "--format", "json"]));
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[0]["values"], serde_json::json!(["1", "2"]));

    let text = stdout(&epi(&["dump", "pascal", "--rows", "3", "--negative"]));
    assert_eq!(text.lines().next().unwrap().trim(), "-3 1 -3 6 -10");
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn persisted_json_round_trips_byte_for_byte() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let o = epi(&["verify", "thm5", "--n", "2", "--x", "1", "--format", "json", "--out", d]);
    assert_eq!(code(&o), 0);
    let path = dir.path().join("thm5_n2_x1.json");
    let text = read(&path);
    assert_eq!(text, stdout(&o));
    let parsed = VerificationReport::from_json(&text).unwrap();
    assert_eq!(format!("{}\n", parsed.to_json()), text);
}

#[test]
fn output_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_epi"))
        .args(["verify", "conj6", "--format", "markdown"])
        .env("EPI_OUTPUT_DIR", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let md = read(&dir.path().join("conj6.md"));
    assert!(md.starts_with("| id | params |"));
    assert!(md.contains("| conj6 |"));
}

#[test]
fn repeated_runs_are_identical() {
    let args = ["verify", "conj7", "--digits", "60", "--format", "json"];
    assert_eq!(epi(&args).stdout, epi(&args).stdout);
}

#[test]
fn verify_all_writes_a_summary() {
    let dir = tempfile::tempdir().unwrap();
    let o = epi(&["verify", "--all", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let summary = read(&dir.path().join("summary.md"));
    let ids: Vec<&str> = summary
        .lines()
        .skip(2)
        .map(|l| l.trim_start_matches("| ").split(' ').next().unwrap())
        .collect();
    assert_eq!(ids.first(), Some(&"brothers_limit"));
    assert_eq!(ids.last(), Some(&"conj7"));
    assert!(dir.path().join("thm1_x2.json").exists());
    assert!(stdout(&o).trim_end().ends_with("as expected"));
}

#[test]
fn terms_and_convergence() {
    let text = stdout(&epi(&["terms", "thm3", "--count", "2"]));
    assert!(text.contains("- (pi^4 - 3pi^2)/5!"), "{text}");
    let o = epi(&["converge", "thm3", "--depths", "5,10,20"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 5);
    assert_eq!(code(&epi(&["converge", "thm3", "--depths", "10,5"])), 2);
}

#[test]
fn in_process_entry_point() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = epi_cli::run(["epi", "verify", "nope"], &mut out, &mut err);
    assert_eq!(code, epi_cli::EXIT_USAGE);
    assert!(String::from_utf8(err).unwrap().contains("unknown identity"));
}
