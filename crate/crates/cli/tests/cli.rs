//! End-to-end checks of the installed binary: JSON round trips for one
//! instance of every command (acceptance criterion 8) and the documented exit
//! codes on malformed inputs.

use sphere_tdual_cli::dto::*;
use std::process::{Command, Output};

fn stdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stdual"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

/// Parse, re-serialize, re-parse: both parses must agree exactly.
fn round_trip<I, R>(text: &str) -> Document<I, R>
where
    I: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug,
    R: serde::de::DeserializeOwned + serde::Serialize + PartialEq + std::fmt::Debug,
{
    let first: Document<I, R> = serde_json::from_str(text).expect("document parses");
    let re_emitted = serde_json::to_string(&first).expect("document re-serializes");
    let second: Document<I, R> = serde_json::from_str(&re_emitted).expect("re-parse");
    assert_eq!(first, second, "round trip changed the document");
    first
}

#[test]
fn criterion_8_json_round_trips() {
    let out = stdual(&["bundle-cohomology", "--base", "S6", "--e", "6", "--json"]);
    assert!(out.status.success());
    let doc: Document<BundleInputs, CohomologyResults> = round_trip(&stdout_of(&out));
    assert_eq!(doc.command, "bundle-cohomology");
    assert_eq!(doc.results.cohomology.len(), 12);
    assert_eq!(doc.results.cohomology[6].group.torsion, vec![6]);

    let out = stdual(&["twisted", "--base", "S2xS4", "--e", "4", "--h", "10", "--json"]);
    assert!(out.status.success());
    let doc: Document<TwistedInputs, TwistedResults> = round_trip(&stdout_of(&out));
    assert_eq!(doc.results.even_h.rank, 2);
    assert_eq!(doc.results.even_h.torsion, vec![4]);
    assert_eq!(doc.results.agree, Some(true));

    let out = stdual(&["tdual", "--base", "S6", "--e", "6", "--h", "10", "--json"]);
    assert!(out.status.success());
    let doc: Document<TwistedInputs, TdualResults> = round_trip(&stdout_of(&out));
    assert_eq!((doc.results.dual_e, doc.results.dual_h), (10, 6));
    assert!(doc.results.cohomology.ok);
    assert!(doc.results.ktheory.expect("torsion-free base has K").ok);

    let out = stdual(&["chern-verify", "--k", "2", "--N", "14", "--json"]);
    assert!(out.status.success());
    let doc: Document<ChernInputs, ChernResults> = round_trip(&stdout_of(&out));
    assert!(doc.results.d_squared_holds);
    assert_eq!(doc.results.closure_sign, -1);
    assert!(!doc.results.plus_sign_convention_agrees);
    assert!(doc.results.factorial_odd_series_closes);
    assert!(!doc.results.lambda_weighted_odd_series_closes);

    println!("criterion 8 (CLI round trip and exit codes): PASS");
}

#[test]
fn criterion_8_exit_codes_on_malformed_inputs() {
    // admissibility: odd Euler number for n = 3
    let out = stdual(&["bundle-cohomology", "--base", "S6", "--e", "5"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr).to_string();
    assert!(
        stderr.contains("Euler number must be even for n=3"),
        "{stderr}"
    );

    // invalid base: not in the catalog
    let out = stdual(&["twisted", "--base", "K3", "--e", "2", "--h", "0"]);
    assert_eq!(out.status.code(), Some(3));

    // bad parameters: unparseable flag value
    let out = stdual(&["twisted", "--base", "S6", "--e", "six", "--h", "0"]);
    assert_eq!(out.status.code(), Some(4));

    // bad parameters: truncation too small
    let out = stdual(&["chern-verify", "--k", "1", "--N", "3"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn inadmissible_dual_flux_exits_2() {
    let out = stdual(&["tdual", "--base", "S6", "--e", "6", "--h", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn base_file_pipeline() {
    let dir = std::env::temp_dir();
    let path = dir.join(format!("m8-{}.json", std::process::id()));
    std::fs::write(
        &path,
        r#"{"name": "M8", "dim": 8,
            "groups": [
              {"degree": 0, "rank": 1},
              {"degree": 4, "rank": 2},
              {"degree": 8, "rank": 1}
            ]}"#,
    )
    .unwrap();
    let out = stdual(&[
        "tdual",
        "--base-file",
        path.to_str().unwrap(),
        "--e",
        "5",
        "--h",
        "7",
        "--json",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let doc: Document<TwistedInputs, TdualResults> =
        serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(doc.inputs.base, "M8");
    assert_eq!((doc.results.dual_e, doc.results.dual_h), (7, 5));
    assert!(doc.results.cohomology.ok);
    std::fs::remove_file(path).ok();

    // unreadable base file is an invalid-base error
    let out = stdual(&["twisted", "--base-file", "/nonexistent.json", "--e", "2", "--h", "0"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn help_exits_zero() {
    let out = stdual(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
}
