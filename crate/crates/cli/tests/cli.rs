use std::path::PathBuf;
use std::process::{Command, Output};

use eigloc::regions::RegionJson;
use eigloc::InclusionRegion;
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("examples").join(name)
}

fn eigloc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eigloc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_on(sub: &str, file: &str, extra: &[&str]) -> Output {
    let path = fixture(file);
    let mut args = vec![sub, "--input", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    eigloc(&args)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn localize_text_reports_classic_discs() {
    let o = run_on("localize", "ex1.mat", &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for needle in ["gamma = 0.4", "radius = 1.05", "gamma' = 0.35", "radius = 1.2", "irreducible: yes"] {
        assert!(text.contains(needle), "missing {needle:?} in\n{text}");
    }
    assert!(text.contains("group i = 4:"));
}

#[test]
fn localize_with_eigs_marks_every_group() {
    let o = run_on("localize", "ex1.mat", &["--with-eigs"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows: Vec<&str> = text
        .lines()
        .skip_while(|l| !l.trim_start().starts_with("eigenvalue "))
        .skip(1)
        .collect();
    assert_eq!(rows.len(), 3, "{text}");
    for row in rows {
        assert!(!row.contains("OUT"), "{row}");
        assert_eq!(row.matches(" in").count(), 7, "{row}");
    }
}

#[test]
fn localize_json_round_trips() {
    let o = run_on("localize", "ex1.mat", &["--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: RegionJson = serde_json::from_str(&stdout(&o)).unwrap();
    let region = InclusionRegion::from_json(&doc);
    let s = eigloc::StochasticMatrix::from_rows(&[
        [0.25, 0.25, 0.3, 0.2],
        [0.0, 0.5, 0.33, 0.17],
        [0.6, 0.4, 0.0, 0.0],
        [0.1, 0.2, 0.3, 0.4],
    ])
    .unwrap();
    assert_eq!(region, eigloc::full_inclusion_region(&s).unwrap());

    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["irreducible"], Value::Bool(true));
    assert!((v["cvetkovic"]["gamma"].as_f64().unwrap() - 0.4).abs() < 1e-12);
    assert!((v["lili"]["radius"].as_f64().unwrap() - 1.2).abs() < 1e-12);
}

#[test]
fn one_by_one_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("one.mat");
    std::fs::write(&path, "1\n1\n").unwrap();
    let o = eigloc(&["localize", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("too small"));
}

#[test]
fn malformed_matrix_reports_line() {
    let o = run_on("localize", "malformed.mat", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
}

#[test]
fn missing_file_is_an_input_error() {
    let o = run_on("localize", "no-such-file.mat", &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn row_sum_violation_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.mat");
    std::fs::write(&path, "2\n0.5 0.6\n0.5 0.5\n").unwrap();
    let o = eigloc(&["localize", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let loose = eigloc(&["localize", "--input", path.to_str().unwrap(), "--row-sum-tol", "0.2"]);
    assert_eq!(loose.status.code(), Some(0));
}

#[test]
fn unwritable_output_is_an_internal_failure() {
    let dir = tempfile::tempdir().unwrap();
    let o = run_on("localize", "ex1.mat", &["--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = run_on("localize", "ex1.mat", &["--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert!(std::fs::read_to_string(&path).unwrap().contains("gamma = 0.4"));
}

#[test]
fn randic_example_graph() {
    let o = run_on("randic", "ex2.edges", &["--with-eigs"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for needle in ["lambda_2 <= 0.75", "lambda_n >= -0.95", "rojo-soto lower bound: -1"] {
        assert!(text.contains(needle), "missing {needle:?} in\n{text}");
    }
    assert!(!text.contains("regular (r ="));
}

#[test]
fn randic_triangle_is_tight() {
    let o = run_on("randic", "k3.edges", &["--with-eigs"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("lambda_2 <= -0.5"));
    assert!(text.contains("lambda_n >= -0.5"));
    let tight: Vec<&str> = text.lines().filter(|l| l.starts_with("oracle")).collect();
    assert_eq!(tight.len(), 2);
    assert!(tight.iter().all(|l| l.ends_with("tight")), "{text}");
}

#[test]
fn randic_json() {
    let o = run_on("randic", "ex2.edges", &["--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!((v["lambda_2_upper"].as_f64().unwrap() - 0.75).abs() < 1e-12, "{v}");
    assert!((v["lambda_n_lower"].as_f64().unwrap() + 0.95).abs() < 1e-12, "{v}");
}

#[test]
fn disconnected_graph_is_an_input_error() {
    let o = run_on("randic", "disconnected.edges", &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("disconnected"));
}

#[test]
fn compare_example_one() {
    let o = run_on("compare", "ex1.mat", &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let row = text.lines().find(|l| l.starts_with("1 ")).unwrap();
    assert!(row.ends_with("true  true"), "{row}");
    assert!(text.contains("tightest group: i = 1"));
}

#[test]
fn compare_exchange_matrix_degenerates() {
    let o = run_on("compare", "exchange.mat", &["--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let groups = v["groups"].as_array().unwrap();
    assert_eq!(groups.len(), 2);
    for g in groups {
        assert_eq!(g["in_cvetkovic"], Value::Bool(true));
        assert_eq!(g["in_lili"], Value::Bool(true));
        assert_eq!(g["hull"][0].as_f64(), Some(-1.0));
        assert_eq!(g["hull"][1].as_f64(), Some(-1.0));
    }
}

#[test]
fn compare_warns_on_reducible_input() {
    let o = run_on("compare", "reducible.mat", &[]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let warn = text.find("matrix is reducible").expect("warning");
    let table = text.find("group  hull_lo").expect("table");
    assert!(warn < table);

    let json = run_on("compare", "reducible.mat", &["--format", "json"]);
    assert!(stderr(&json).contains("matrix is reducible"));
}

#[test]
fn plot_counts_elements() {
    let o = run_on("plot", "ex1.mat", &["--with-eigs"]);
    assert_eq!(o.status.code(), Some(0));
    let svg = stdout(&o);
    assert!(svg.starts_with("<?xml"));
    assert_eq!(svg.matches("<circle data-label=").count(), 12);
    assert_eq!(svg.matches(r#"class="unit-circle""#).count(), 1);
    assert_eq!(svg.matches("<circle").count(), 13);
    assert_eq!(svg.matches(r#"class="eigenvalue""#).count(), 4);
    assert_eq!(svg.matches(r#"class="special-point""#).count(), 1);
    assert_eq!(svg.matches(r#"class="group""#).count(), 4);
}

#[test]
fn plot_is_deterministic() {
    let a = run_on("plot", "ex1.mat", &[]);
    let b = run_on("plot", "ex1.mat", &[]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn plot_exchange_matrix_draws_points() {
    let o = run_on("plot", "exchange.mat", &[]);
    let svg = stdout(&o);
    assert_eq!(svg.matches(r#"<circle class="point""#).count(), 2);
}

#[test]
fn plot_rejects_text_format() {
    let o = run_on("plot", "ex1.mat", &["--format", "text"]);
    assert_eq!(o.status.code(), Some(2));
}
