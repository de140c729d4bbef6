use std::process::{Command, Output};

fn g2chev(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2chev"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn all_plus_csv_table() {
    let out = g2chev(&["table", "--signs", "+", "+", "+", "+", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let rows: Vec<Vec<&str>> = text.lines().map(|l| l.split(',').collect()).collect();
    assert_eq!(rows.len(), 13);
    assert!(rows.iter().all(|r| r.len() == 13));
    let col = rows[0].iter().position(|&c| c == "2a+b").unwrap();
    let row = rows.iter().position(|r| r[0] == "a+b").unwrap();
    assert_eq!(rows[row][col], "-3");
}

#[test]
fn boxed_first_formula() {
    let out = g2chev(&[
        "formulas", "--signs", "symbolic", "--format", "latex", "--pair", "b,a",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains(
        "\\fbox{$[x_b(u),x_a(t)]=x_{a+b}(-\\epsilon_1tu)\\,x_{2a+b}(\\epsilon_1\\epsilon_2t^2u)\\,\
         x_{3a+b}(-\\epsilon_1\\epsilon_2\\epsilon_3t^3u)\\,x_{3a+2b}(-\\epsilon_2\\epsilon_5t^3u^2)$}"
    ));
}

#[test]
fn full_verification() {
    let out = g2chev(&["verify", "--signs", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(
        text.lines()
            .any(|l| l == "960/960 formulas verified, 16/16 Jacobi passes"),
        "{text}"
    );
    assert!(text.contains("16/16 relation passes"));
}

#[test]
fn json_report() {
    let out = g2chev(&["verify", "--signs", "-", "+", "+", "-", "--format", "json"]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let checks = report["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 60);
    assert_eq!(checks[0]["sigma"], "-++-");
    assert!(checks.iter().all(|c| c["status"] == "pass"));
    assert_eq!(
        report["summary"],
        "60/60 formulas verified, 1/1 Jacobi passes"
    );
    assert_eq!(report["passed"], true);
}

#[test]
fn listed_subset_and_json_formulas() {
    let out = g2chev(&["formulas", "--listed", "--format", "json"]);
    let formulas: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(formulas.len(), 41);
    assert_eq!(formulas[40]["left"], "-3a-b");
    assert_eq!(formulas[40]["terms"][0]["target"], "b");
    let all = g2chev(&["formulas"]);
    assert_eq!(stdout(&all).lines().count(), 60);
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "--format", "json"][..],
        &["formulas", "--format", "latex"][..],
        &["verify", "--signs", "+", "-", "-", "+", "--format", "json"][..],
    ] {
        assert_eq!(g2chev(args).stdout, g2chev(args).stdout, "{args:?}");
    }
}

#[test]
fn writes_to_file() {
    let path = std::env::temp_dir().join(format!("g2chev-table-{}.tex", std::process::id()));
    let out = g2chev(&[
        "table",
        "--format",
        "latex",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert!(text.starts_with("\\documentclass") && text.trim_end().ends_with("\\end{document}"));
}

#[test]
fn usage_errors() {
    for args in [
        &["table", "--signs", "all"][..],
        &["formulas", "--format", "csv"][..],
        &["verify", "--format", "csv"][..],
        &["verify", "--signs", "symbolic"][..],
        &["table", "--signs", "+", "x", "+", "+"][..],
        &["formulas", "--pair", "a,-a"][..],
        &["formulas", "--pair", "a,c"][..],
        &["bogus"][..],
    ] {
        let out = g2chev(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!out.stderr.is_empty(), "{args:?}");
    }
}
