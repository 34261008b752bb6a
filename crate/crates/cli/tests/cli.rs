use std::path::Path;
use std::process::{Command, Output};

fn rotsym(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rotsym"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn ok(args: &[&str]) -> String {
    let o = rotsym(args);
    assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stderr(&o));
    stdout(&o)
}

#[test]
fn build_f2_5_matches_block_string() {
    let o = rotsym(&["build", "f2", "--n", "5", "--blocks"]);
    assert_eq!(o.status.code(), Some(0));
    // VYVȲ XŪX̄Ū = 0001 0010 0001 1101 0100 0111 1011 0111
    assert_eq!(stdout(&o), "n=5\n121d47b7\n");
    let err = stderr(&o);
    assert!(err.contains("op-count: 2 block complements"), "{err}");
    assert!(err.contains("blocks: VYVY\u{304}XU\u{304}X\u{304}U\u{304}"), "{err}");
}

#[test]
fn small_f3_falls_back_to_oracle() {
    let o = rotsym(&["build", "f3", "--n", "6"]);
    assert!(stderr(&o).is_empty(), "no op-count without the fast builder");
    let text = stdout(&o);
    let ones: u32 = text.lines().nth(1).unwrap().chars().map(|c| c.to_digit(16).unwrap().count_ones()).sum();
    assert_eq!(ones, 18);
}

#[test]
fn analyze_f3_9() {
    let out = ok(&["analyze", "f3", "--n", "9"]);
    assert_eq!(out, "n=9 weight=172 nonlinearity=172 balanced=no bent=no semibent=no\n");
    let csv = ok(&["analyze", "f3", "--n", "9", "--format", "csv"]);
    assert_eq!(csv, "n,weight,nonlinearity,balanced,bent,semibent\n9,172,172,false,false,false\n");
}

#[test]
fn analyze_f2_7_with_pc() {
    let out = ok(&["analyze", "f2", "--n", "7", "--pc"]);
    assert!(out.starts_with("n=7 weight=64 nonlinearity=56 balanced=yes bent=no semibent=yes\n"));
    assert!(out.contains("pc degree=6 sac=yes"));
    assert!(out.contains("pc weight  3: 35/35"));
    let json: serde_json::Value =
        serde_json::from_str(&ok(&["analyze", "f2", "--n", "7", "--pc", "--format", "json"])).unwrap();
    assert_eq!(json[0]["pc"]["degree"], 6);
    assert_eq!(json[0]["pc"]["classes"][6]["total"], 1);
}

#[test]
fn analyze_range_in_csv() {
    let csv = ok(&["analyze", "t", "--n-range", "4..6", "--format", "csv"]);
    let bent: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(4).unwrap()).collect();
    assert_eq!(bent, ["true", "false", "true"]);
}

#[test]
fn analyze_zero_function_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("zero.txt");
    std::fs::write(&path, "n=4\n0000\n").unwrap();
    let out = ok(&["analyze", "--from-file", path.to_str().unwrap()]);
    assert_eq!(out, "n=4 weight=0 nonlinearity=0 balanced=no bent=no semibent=no\n");
}

#[test]
fn malformed_file_names_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.txt");
    std::fs::write(&path, "n=4\n00g0\n").unwrap();
    let o = rotsym(&["analyze", "--from-file", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
}

#[test]
fn build_then_analyze_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let table = dir.path().join("f2_8.txt");
    let spectrum = dir.path().join("spectrum.csv");
    ok(&["build", "f2", "--n", "8", "--output", table.to_str().unwrap()]);
    let from_file = ok(&[
        "analyze",
        "--from-file",
        table.to_str().unwrap(),
        "--spectrum",
        spectrum.to_str().unwrap(),
    ]);
    assert_eq!(from_file, ok(&["analyze", "f2", "--n", "8"]));
    let spectrum = std::fs::read_to_string(spectrum).unwrap();
    assert!(spectrum.starts_with("w,value\n"));
    assert_eq!(spectrum.lines().count(), 257);
}

#[test]
fn orbit_of_x1x2_equals_f2() {
    assert_eq!(
        ok(&["build", "orbit", "--n", "9", "--generator", "1,2"]),
        ok(&["build", "f2", "--n", "9"])
    );
}

#[test]
fn tables_match_reference() {
    let out = ok(&["tables"]);
    assert!(out.contains("all values match the reference tables"));
    let csv = ok(&["tables", "--format", "csv"]);
    assert!(csv.contains("\n12,1576,1576,712,376,220,268\n"));
    assert!(csv.contains("\n5,6,6,2,,,\n"));
}

#[test]
fn conjecture_holds_up_to_9() {
    let out = ok(&["conjecture", "--n-range", "3..9"]);
    assert!(out.trim_end().ends_with("conjecture holds on [3, 9]"));
    let csv = ok(&["conjecture", "--n-range", "8..10", "--format", "csv"]);
    assert_eq!(
        csv,
        "n,weight,nonlinearity,source\n8,80,80,paper-table\n9,172,172,paper-table\n10,360,360,computed\n"
    );
}

#[test]
fn gf_series() {
    let csv = ok(&["gf", "f3", "--upto", "12", "--format", "csv"]);
    let coeffs: Vec<&str> = csv.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(coeffs[11..], ["760", "1576"]);
    assert!(csv.lines().skip(4).all(|l| l.ends_with(",true")));
    let f2 = ok(&["gf", "f2", "--upto", "4"]);
    assert!(f2.starts_with("coefficients: 0, 0, 0, 0, 0\n"));
}

#[test]
fn bench_counts_are_deterministic() {
    let args = ["bench", "f2", "--n-range", "10", "--format", "csv"];
    let csv = ok(&args);
    assert_eq!(
        csv,
        "n,naive_estimate,measured_blocks,measured_bits,published,deviation,oracle_agrees\n\
         10,14848,126,504,126,0,true\n"
    );
    assert_eq!(csv, ok(&args));
}

#[test]
fn usage_errors_exit_1() {
    for args in [
        &["frobnicate"][..],
        &["build", "f2"],
        &["build", "f2", "--n", "2"],
        &["build", "monomial", "--n", "5"],
        &["analyze", "f2", "--n", "21"],
        &["bench", "f3", "--n-range", "5..8"],
        &["gf", "f2", "--upto", "65"],
    ] {
        assert_eq!(rotsym(args).status.code(), Some(1), "{args:?}");
    }
    assert_eq!(rotsym(&["--help"]).status.code(), Some(0));
}

#[test]
fn fixtures_are_bundled() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("resources");
    assert!(dir.join("f3_weights.csv").exists());
}
