//! The command line, through `cli::run` and through the built binary.

use std::process::Command;

use qcomb::identities::IdentityReport;
use qcomb::numbers::TableRow;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("qcomb").chain(args.iter().copied());
    let code = qcomb::cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn table_csv_has_one_row_per_cell() {
    let (code, out, _) = run(&["table", "--family", "stirling2_q", "--n", "0..5", "--r", "0", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "family,n,k,r,provenance,value");
    assert_eq!(lines.len() - 1, 21);
    assert!(lines.contains(&"stirling2_q,3,2,0,recurrence,0 2 1"));
}

#[test]
fn table_json_round_trips() {
    let (code, out, _) = run(&["table", "--family", "hsu_shiue", "--n", "0..3", "--format", "json"]);
    assert_eq!(code, 0);
    let rows: Vec<TableRow> = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.len(), 10);
    let row = rows.iter().find(|r| r.n == 2 && r.k == Some(1)).unwrap();
    assert_eq!(row.value.to_string(), "α + β + 2r");
}

#[test]
fn bell_table_in_text() {
    let (code, out, _) = run(&["table", "--family", "bell_q", "--n", "4", "--r", "0", "--format", "text"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "bell_q(4,0) = 1 + 3q + 3q^2 + 4q^3 + 2q^4 + q^5 + q^6");
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "--identity", "I-SPIVEY", "--m", "0..6", "--n", "0..6"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("PASS I-SPIVEY"));

    let (code, _, err) = run(&["verify", "--identity", "NO-SUCH"]);
    assert_eq!(code, 2);
    assert!(err.contains("NO-SUCH"));

    let (code, out, _) = run(&["verify", "--identity", "I-PE1", "--format", "json"]);
    assert_eq!(code, 1);
    let reports: Vec<IdentityReport> = serde_json::from_str(&out).unwrap();
    assert_eq!(reports[0].counterexample.as_ref().unwrap().params["r"], 2);

    let (code, _, _) = run(&["verify", "--identity", "I-PE1-CORR", "--jobs", "2"]);
    assert_eq!(code, 0);
}

#[test]
fn verify_all_reports_every_identity() {
    let (code, out, _) = run(&["verify", "--all", "--default-grids", "--format", "csv"]);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), qcomb::identities::registry().len());
    let failing: Vec<&str> = rows.iter().filter(|r| r.contains(",FAIL,")).map(|r| r.split(',').next().unwrap()).collect();
    assert_eq!(failing, ["I-PE1", "I-BIN-7"]);
    assert_eq!(code, 1);
}

#[test]
fn verify_is_deterministic() {
    let a = run(&["verify", "--all", "--format", "json"]);
    let b = run(&["verify", "--all", "--format", "json", "--jobs", "1"]);
    assert_eq!(a, b);
}

#[test]
fn oracle_diffs_are_empty() {
    for args in [
        &["oracle-diff", "--family", "lah_q", "--n", "0..6"][..],
        &["oracle-diff", "--family", "ext_lah", "--n", "0..6"],
        &["oracle-diff", "--family", "stirling2_q", "--n", "0..3", "--r", "1"],
        &["oracle-diff", "--family", "stirling1_q", "--n", "0..5", "--r", "0..2", "--format", "json"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert!(out.trim().is_empty() || out.trim() == "[]", "{out}");
    }
}

#[test]
fn usage_and_capacity_errors_exit_2() {
    let cases: &[&[&str]] = &[
        &["table", "--family", "nope", "--n", "3"],
        &["table", "--family", "lah_q", "--n", "-1"],
        &["table", "--family", "lah_q", "--n", "4..2"],
        &["oracle-diff", "--family", "stirling2_q", "--n", "12", "--cell-cap", "100"],
        &["oracle-diff", "--family", "ext_lah", "--n", "3", "--r", "1"],
        &["verify", "--identity", "I-SPIVEY", "--all"],
        &["frobnicate"],
    ];
    for args in cases {
        let (code, _, err) = run(args);
        assert_eq!(code, 2, "{args:?}");
        assert!(!err.is_empty());
    }
}

#[test]
fn cap_flag_beats_environment() {
    let bin = env!("CARGO_BIN_EXE_qcomb");
    let status = |extra: &[&str]| {
        Command::new(bin)
            .args(["oracle-diff", "--family", "lah_q", "--n", "5"])
            .args(extra)
            .env("QCOMB_MAX_ENUM", "10")
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(status(&[]), Some(2));
    assert_eq!(status(&["--cell-cap", "1000"]), Some(0));
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("oracle-diff"));
}
