use std::process::{Command, Output};

use hecke_rgroup::{InductionDatum, Partition, Rational};
use hecke_rgroup_cli::report::{ConvertReport, Report, ResidualListing, Table};
use hecke_rgroup_cli::cmd_rgroup;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hecke-rgroup"))
        .args(args)
        .env_remove("HECKE_RGROUP_BOUND_N")
        .output()
        .expect("binary runs")
}

fn json<T: serde::de::DeserializeOwned>(args: &[&str]) -> (T, i32) {
    let out = run(args);
    let value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("bad JSON from {args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr))
    });
    (value, out.status.code().expect("exit code"))
}

#[test]
fn worked_example_has_four_components() {
    let (report, code): (Report, _) = json(&[
        "--json", "rgroup", "-n", "36", "-m", "3", "--kappa", "11,7,4,3", "--mu", "4,3,2,1,1",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report.schema_version, 1);
    assert_eq!(report.d, 2);
    assert_eq!(report.component_count, 4);
    assert_eq!(report.gluable_lengths, vec![11, 7]);
    assert_eq!(report.generators.len(), 2);
    assert!(report.all_checks_pass());
}

#[test]
fn all_ones_at_zero_is_reducible() {
    let (report, code): (Report, _) = json(&["--json", "rgroup", "-n", "2", "-m", "0", "--kappa", "1,1", "--oracle"]);
    assert_eq!(code, 0);
    assert_eq!((report.d, report.component_count), (1, 2));
    let oracle = report.oracle.expect("oracle ran");
    assert_eq!(oracle.r_group_order, 2);
    assert_eq!(report.checks.get("oracleRGroup"), Some(&true));
}

#[test]
fn pure_discrete_series_is_irreducible() {
    let (report, code): (Report, _) = json(&["--json", "rgroup", "-n", "2", "-m", "1/2", "--kappa", "", "--mu", "2"]);
    assert_eq!(code, 0);
    assert_eq!((report.d, report.component_count), (0, 1));
}

#[test]
fn report_json_round_trips() {
    let datum = InductionDatum::new(
        36,
        Rational::from_int(3),
        Partition::new(vec![11, 7, 4, 3]),
        Partition::new(vec![4, 3, 2, 1, 1]),
    )
    .unwrap();
    let report = cmd_rgroup(&datum, None).unwrap();
    let text = serde_json::to_string(&report).unwrap();
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, report);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
}

#[test]
fn invalid_datum_exits_with_two() {
    let out = run(&["rgroup", "-n", "3", "-m", "1", "--kappa", "1", "--mu", "1,1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not residual"));

    let out = run(&["rgroup", "-n", "4", "-m", "1", "--kappa", "1", "--mu", "2"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["rgroup", "-n", "2", "-m", "0.5", "--kappa", "2"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("exact fraction"));

    let out = run(&["rgroup", "-n", "2"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn oracle_respects_bound_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_hecke-rgroup"))
        .args(["--json", "rgroup", "-n", "3", "-m", "1", "--kappa", "2,1", "--oracle"])
        .env("HECKE_RGROUP_BOUND_N", "2")
        .output()
        .unwrap();
    let report: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.oracle.is_none());
    assert!(report.notes.iter().any(|n| n.contains("exceeds bound 2")));
}

#[test]
fn residual_listing() {
    let (listing, code): (ResidualListing, _) = json(&["--json", "residual", "-l", "1", "-m", "1"]);
    assert_eq!(code, 0);
    let lambdas: Vec<String> = listing.points.iter().map(|p| p.lambda.to_string()).collect();
    assert_eq!(lambdas, ["(1)"]);

    let (listing, _): (ResidualListing, _) = json(&["--json", "residual", "-l", "2", "-m", "1"]);
    let lambdas: Vec<String> = listing.points.iter().map(|p| p.lambda.to_string()).collect();
    assert_eq!(lambdas, ["(2)"]);

    // (1,1) at m = 1/2 has two boxes of entry 1/2 and fails the root count.
    let (listing, _): (ResidualListing, _) = json(&["--json", "residual", "-l", "2", "-m", "1/2"]);
    let lambdas: Vec<String> = listing.points.iter().map(|p| p.lambda.to_string()).collect();
    assert_eq!(lambdas, ["(2)"]);
}

#[test]
fn table_rows() {
    let (table, code): (Table, _) = json(&["--json", "table", "-n", "4", "-m", "1/2"]);
    assert_eq!(code, 0);
    let row = table
        .rows
        .iter()
        .find(|r| r.kappa == Partition::new(vec![2]) && r.mu == Partition::new(vec![2]))
        .expect("kappa=(2), mu=(2) row");
    assert_eq!(row.d, 1);
    assert!(table.rows.iter().filter(|r| r.kappa.is_empty()).all(|r| r.component_count == 1));

    let (table, _): (Table, _) = json(&["--json", "table", "-n", "2", "-m", "0"]);
    assert!(table
        .rows
        .iter()
        .any(|r| r.kappa == Partition::new(vec![1, 1]) && r.mu.is_empty() && r.d == 1));
}

#[test]
fn table_is_identical_across_worker_counts() {
    let one = run(&["--jobs", "1", "--json", "table", "-n", "5", "-m", "0,1/2,1"]);
    let many = run(&["--jobs", "3", "--json", "table", "-n", "5", "-m", "0,1/2,1"]);
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn table_csv_has_fixed_columns() {
    let out = run(&["--csv", "table", "-n", "2", "-m", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,m,kappa,mu,d,components,gluable_lengths,class_size,cardinality,intervals,gluing")
    );
    assert!(lines.any(|l| l == "2,0,1 1,,1,2,1,2,true,true,true"));
}

#[test]
fn csv_is_rejected_outside_table() {
    let out = run(&["--csv", "residual", "-l", "1", "-m", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_single_suite() {
    let out = run(&["selftest", "--suite", "pairs"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("pairs"));
    assert_eq!(text.lines().count(), 1);

    let out = run(&["selftest", "--suite", "nonsense"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn selftest_with_small_bounds_runs_every_suite() {
    let out = run(&["selftest", "--bound-n", "4", "--bound-l", "5"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    for suite in ["residual", "gluing", "pairs", "oracle", "symbols"] {
        assert!(text.lines().any(|l| l.starts_with(suite)), "missing {suite}");
    }
}

#[test]
fn convert_c_labels() {
    let (c, code): (ConvertReport, _) = json(&["--json", "convert-c", "--k1", "1", "--k2", "1"]);
    assert_eq!(code, 0);
    assert_eq!((c.k1.to_string(), c.k2.to_string()), ("1".into(), "1/2".into()));
    let (c, _): (ConvertReport, _) = json(&["--json", "convert-c", "--k1", "2", "--k2", "2"]);
    assert_eq!(c.m, Rational::new(1, 2));
    let out = run(&["convert-c", "--k1", "0", "--k2", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn split_and_symbols_commands() {
    let out = run(&["split", "--lambda", "1,1,2,3,4", "-m", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("((2,3,4),(2))"));

    let out = run(&["symbols", "--xi", "1,2", "--eta", "3", "-m", "0"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("variant +0"));
    assert!(text.contains("variant -0"));
}
