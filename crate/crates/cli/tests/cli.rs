use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn drs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_drs"))
        .args(args)
        .output()
        .unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let out = drs(&all);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}"))
}

#[test]
fn every_subcommand_emits_json() {
    let (ex1, ch3, toy2, table1, info) = (
        fixture("ex1.json"),
        fixture("ch3.json"),
        fixture("toy2.json"),
        fixture("table1.json"),
        fixture("info-table.json"),
    );
    let runs: Vec<Vec<&str>> = vec![
        vec!["classify", "--space", &ex1],
        vec!["granules", "--space", &ex1],
        vec!["approx", "--space", &ex1, "--set", "e,c"],
        vec!["groupoid", "build", "--space", &ch3],
        vec!["groupoid", "count", "--space", &ch3],
        vec!["groupoid", "check", "--space", &ex1, "--table", &table1],
        vec!["groupoid", "bridge", "--space", &toy2],
        vec!["groupoid", "directoid", "--space", &ch3],
        vec!["groupoid", "tolerance", "--table", &table1],
        vec!["algebra", "uua", "--space", &ch3, "--audit"],
        vec!["algebra", "ua", "--space", &ch3],
        vec!["powgrp", "--space", &ch3, "--a", "1", "--b", "2"],
        vec!["quotient", "--space", &toy2],
        vec![
            "quotient", "--space", &toy2, "--rpa-op", "union", "--arg", "1", "--arg", "2",
        ],
        vec![
            "lattice", "--space", &ch3, "--op", "tri_up", "--cd", "--tr23", "--ei3", "--dual",
        ],
        vec!["fca", "--space", &ch3, "--th40"],
        vec![
            "audit", "--space", &toy2, "--space", &ch3, "--claims", "approx",
        ],
        vec![
            "audit",
            "--space",
            &ex1,
            "--claims",
            "all",
            "--mode",
            "sampled",
            "--samples",
            "50",
        ],
        vec!["table", "--table", &info, "--attributes", "colour"],
    ];
    for args in runs {
        let v = json(&args);
        assert!(v.as_object().is_some_and(|m| !m.is_empty()), "{args:?}");
    }
}

#[test]
fn text_and_raw_outputs() {
    let ex1 = fixture("ex1.json");
    for args in [
        vec!["export-dot", "--what", "space", "--space", ex1.as_str()],
        vec!["export-dot", "--what", "lattice", "--space", ex1.as_str()],
        vec!["emit", "--space", ex1.as_str(), "--edges"],
    ] {
        let out = drs(&args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        assert!(!out.stdout.is_empty());
    }
}

#[test]
fn lattice_verdict_matches_between_renderings() {
    let ch3 = fixture("ch3.json");
    let args = ["lattice", "--space", ch3.as_str(), "--op", "tri_up", "--cd"];
    let v = json(&args);
    let text = String::from_utf8(drs(&args).stdout).unwrap();
    let cd = v["completely_distributive"].as_bool().unwrap();
    assert!(text.contains(&format!("completely_distributive: {cd}")));
}

#[test]
fn exit_codes() {
    let ex1 = fixture("ex1.json");
    let table1 = fixture("table1.json");
    assert_eq!(drs(&["--version"]).status.code(), Some(0));
    assert_eq!(drs(&["classify"]).status.code(), Some(1));
    assert_eq!(
        drs(&["classify", "--space", &table1]).status.code(),
        Some(1)
    );
    assert_eq!(
        drs(&["approx", "--space", &ex1, "--set", "a", "--op", "nope"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        drs(&[
            "--expect-hold",
            "groupoid",
            "check",
            "--space",
            &ex1,
            "--table",
            &table1
        ])
        .status
        .code(),
        Some(2)
    );
    let err = drs(&["classify", "--space", "/nonexistent/space.json"]);
    assert_eq!(err.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&err.stderr).starts_with("error:"));
}
