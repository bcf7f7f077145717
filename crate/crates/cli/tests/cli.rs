//! End-to-end behavior of the `polyface` binary: payload shapes, exit
//! codes and file output.

use std::process::{Command, Output};

fn polyface(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyface"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn fvector_json_and_csv() {
    let out = polyface(&["fvector", "pentasm(5)"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["f_vector"][0], "11");
    assert_eq!(json["f_vector"][4], "8");
    assert_eq!(json["facets"], 8);
    assert_eq!(json["simple_vertices"], 8);

    let csv = polyface(&["fvector", "pyramid(t=1, product(simplex(2), simplex(2)))", "--csv"]);
    assert!(csv.status.success());
    let text = stdout(&csv);
    let mut lines = text.lines();
    assert!(lines.next().unwrap().starts_with("expr,dim,vertices"));
    let row = lines.next().unwrap();
    assert!(row.contains(",5,10,7,"), "row: {row}");
}

#[test]
fn parse_and_domain_errors_exit_2() {
    let bad_name = polyface(&["fvector", "frustum(3)"]);
    assert_eq!(bad_name.status.code(), Some(2));
    let bad_syntax = polyface(&["fvector", "pyramid(t=2"]);
    assert_eq!(bad_syntax.status.code(), Some(2));
    let bad_domain = polyface(&["fvector", "capped_prism(5, 4)"]);
    assert_eq!(bad_domain.status.code(), Some(2));
    let bad_suite = polyface(&["check", "no-such-suite"]);
    assert_eq!(bad_suite.status.code(), Some(2));
    let bad_scan = polyface(&["scan", "--dmax", "3"]);
    assert_eq!(bad_scan.status.code(), Some(2));
    let bad_gale = polyface(&["gale", "i", "5"]);
    assert_eq!(bad_gale.status.code(), Some(2));
}

#[test]
fn minfacets_prints_value() {
    for (f0, expected) in [("10", "7"), ("14", "7"), ("20", "8")] {
        let out = polyface(&["minfacets", f0]);
        assert!(out.status.success());
        assert_eq!(stdout(&out).trim(), expected);
    }
}

#[test]
fn gale_reports_diagram_and_counts() {
    let out = polyface(&["gale", "vi", "5"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["facets"], 8);
    assert_eq!(json["expected_facets"], 8);
    assert_eq!(json["missing_edges"].as_array().unwrap().len(), 4);
    assert_eq!(json["diagram"]["dirs"].as_array().unwrap().len(), 8);

    let out2 = polyface(&["gale", "2", "6"]);
    assert!(out2.status.success());
    let json2: serde_json::Value = serde_json::from_str(&stdout(&out2)).unwrap();
    assert_eq!(json2["variant"], "ii");
    assert_eq!(json2["facets"], 13);
}

#[test]
fn out_flag_writes_file_only() {
    let path = std::env::temp_dir().join(format!("polyface-scan-{}.csv", std::process::id()));
    let out = polyface(&["scan", "--dmax", "10", "--csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty(), "payload must go to the file");
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("d,k,candidate"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn check_suite_runs_and_exits_zero() {
    let out = polyface(&["check", "min-facets"]);
    assert!(out.status.success());
    let json: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(json["suite"], "min-facets");
    assert_eq!(json["pass"], true);
    assert_eq!(json["failed"], 0);
    // Per-check lines go to stderr.
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("[pass] min-facets"));
}
