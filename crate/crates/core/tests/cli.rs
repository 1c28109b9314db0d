use std::process::{Command, Output};

use cyclosemi::cli::{AnalyzeOutput, CensusOutput, RootsOutput, ScanOutput};
use cyclosemi::family::FamilyReport;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn cyclosemi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cyclosemi"))
        .args(args)
        .env_remove("CYCLOSEMI_WORKERS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

// Parse and re-emit; the bytes must not change.
fn round_trip<T: Serialize + DeserializeOwned>(text: &str) -> T {
    let value: T = serde_json::from_str(text).unwrap();
    let again = serde_json::to_string_pretty(&value).unwrap() + "\n";
    assert_eq!(again, text);
    value
}

#[test]
fn analyze_json_round_trips() {
    let o = cyclosemi(&["analyze", "5", "6", "7", "8"]);
    assert_eq!(o.status.code(), Some(0));
    let a: AnalyzeOutput = round_trip(&stdout(&o));
    assert_eq!(a.analysis.frobenius, 9);
    assert!(a.analysis.symmetric);
    assert!(!a.cyclotomic.cyclotomic);
}

#[test]
fn analyze_cyclotomic_semigroup() {
    let o = cyclosemi(&["analyze", "3", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let a: AnalyzeOutput = round_trip(&stdout(&o));
    assert!(a.cyclotomic.cyclotomic);
    assert!(a.cyclotomic.remainder.is_one());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["analyze", "2", "4"][..],
        &["analyze", "0", "3"],
        &["analyze"],
        &["family", "--n", "5", "--t", "1"],
        &["roots", "--n", "20", "--t", "1", "--band"],
        &["census", "--max-genus", "99"],
        &["frobnicate"],
    ] {
        let o = cyclosemi(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn family_report_round_trips() {
    let o = cyclosemi(&["family", "--n", "8", "--t", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let r: FamilyReport = round_trip(&stdout(&o));
    assert!(r.closed_form_agrees && r.gap_structure_holds);
    assert!(r.verdict.agree);
}

#[test]
fn scan_reports_small_cyclotomic_members() {
    // n = 3, 4 give cyclotomic members of the t = 0 family.
    let o = cyclosemi(&["scan", "--t", "0", "--n-min", "3", "--n-max", "10"]);
    assert_eq!(o.status.code(), Some(1));
    let s: ScanOutput = round_trip(&stdout(&o));
    assert!(!s.all_agree);
    assert!(s.rows.iter().filter(|r| r.n >= 5).all(|r| r.agree));

    let o = cyclosemi(&["scan", "--t", "0", "--n-min", "5", "--n-max", "10", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 7);
    assert!(text.starts_with("n,"));
}

#[test]
fn roots_csv_and_checks() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("q.csv");
    let o = cyclosemi(&[
        "roots",
        "--n",
        "200",
        "--t",
        "0",
        "--count",
        "--certificate",
        "--csv",
        path.to_str().unwrap(),
        "--samples",
        "512",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r: RootsOutput = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(r.roots.len(), 400);
    let count = r.count.unwrap().total;
    assert!(count <= 399);
    assert!(r.certificate.unwrap().passes());

    let mut reader = csv::Reader::from_path(&path).unwrap();
    assert_eq!(reader.headers().unwrap(), vec!["theta", "q"]);
    let rows: Vec<(f64, f64)> = reader.deserialize().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 512);
    assert!(rows.iter().all(|(th, q)| (0.0..std::f64::consts::TAU).contains(th) && q.is_finite()));
}

#[test]
fn roots_band() {
    let o = cyclosemi(&["roots", "--n", "50", "--t", "0", "--band"]);
    assert_eq!(o.status.code(), Some(0));
    let r: RootsOutput = serde_json::from_str(&stdout(&o)).unwrap();
    let band = r.band.unwrap();
    assert!(band.pass && band.off_circle_witness);
}

#[test]
fn census_json_and_summary_file() {
    let dir = tempfile::tempdir().unwrap();
    let summary = dir.path().join("summary.json");
    let o = cyclosemi(&[
        "census",
        "--max-genus",
        "9",
        "--format",
        "json",
        "--summary",
        summary.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let c: CensusOutput = round_trip(&stdout(&o));
    assert_eq!(c.summary.totals_by_genus, vec![1, 1, 2, 4, 7, 12, 23, 39, 67, 118]);
    assert_eq!(c.rows.iter().map(|r| r.total).sum::<u64>(), 274);
    let on_disk: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&summary).unwrap()).unwrap();
    assert_eq!(on_disk, serde_json::to_value(&c.summary).unwrap());
}

#[test]
fn census_worker_count_does_not_change_output() {
    let single = cyclosemi(&["census", "--max-genus", "11", "--workers", "1"]);
    let via_env = Command::new(env!("CARGO_BIN_EXE_cyclosemi"))
        .args(["census", "--max-genus", "11"])
        .env("CYCLOSEMI_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(single.status.code(), Some(0));
    assert_eq!(via_env.status.code(), Some(0));
    assert_eq!(single.stdout, via_env.stdout);

    let zero = cyclosemi(&["census", "--max-genus", "3", "--workers", "0"]);
    assert_eq!(zero.status.code(), Some(2));
}
