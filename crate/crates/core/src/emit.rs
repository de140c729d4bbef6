//! Text renderings of tables, formulas and verification reports.
//!
//! Tables use the canonical root order for both rows and columns. Zero
//! entries are blank in the grid formats and omitted from JSON.

use serde::Serialize;
use serde_json::{Map, Value};

use crate::commutators::CommutatorFormula;
use crate::constants::ConstantTable;
use crate::report::VerificationReport;
use crate::rootsys::{Root, ALL_ROOTS};
use crate::signs::{Notation, SignAssignment, SignCoefficient};

const LATEX_PREAMBLE: &str =
    "\\documentclass{article}\n\\usepackage[margin=1cm,landscape]{geometry}\n\\begin{document}\n";
const LATEX_END: &str = "\\end{document}\n";

fn cell(
    table: &ConstantTable,
    r: Root,
    s: Root,
    sigma: Option<SignAssignment>,
) -> Option<SignCoefficient> {
    let value = table.get(r, s);
    if value.is_zero() {
        return None;
    }
    Some(match sigma {
        Some(sigma) => SignCoefficient::new(value.specialize(sigma), Default::default()),
        None => value,
    })
}

fn grid(
    table: &ConstantTable,
    sigma: Option<SignAssignment>,
    notation: Notation,
) -> Vec<Vec<String>> {
    let mut rows = vec![std::iter::once("N".to_string())
        .chain(ALL_ROOTS.iter().map(|s| s.to_string()))
        .collect::<Vec<_>>()];
    for r in ALL_ROOTS {
        let mut row = vec![r.to_string()];
        for s in ALL_ROOTS {
            row.push(
                cell(table, r, s, sigma)
                    .map(|c| c.render(notation))
                    .unwrap_or_default(),
            );
        }
        rows.push(row);
    }
    rows
}

/// `{"r|s": "coefficient", ...}` over the nonzero entries.
pub fn table_json(table: &ConstantTable, sigma: Option<SignAssignment>) -> String {
    let mut map = Map::new();
    for r in ALL_ROOTS {
        for s in ALL_ROOTS {
            if let Some(c) = cell(table, r, s, sigma) {
                map.insert(format!("{r}|{s}"), Value::String(c.to_string()));
            }
        }
    }
    let mut out = serde_json::to_string_pretty(&Value::Object(map)).expect("string map serializes");
    out.push('\n');
    out
}

pub fn table_csv(table: &ConstantTable, sigma: Option<SignAssignment>) -> String {
    grid(table, sigma, Notation::Unicode)
        .into_iter()
        .map(|row| row.join(",") + "\n")
        .collect()
}

/// Space-aligned grid in ASCII notation.
pub fn table_ascii(table: &ConstantTable, sigma: Option<SignAssignment>) -> String {
    let rows = grid(table, sigma, Notation::Ascii);
    let width = rows.iter().flatten().map(|c| c.len()).max().unwrap_or(0);
    rows.into_iter()
        .map(|row| {
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            line.join(" ").trim_end().to_string() + "\n"
        })
        .collect()
}

pub fn table_latex(table: &ConstantTable, sigma: Option<SignAssignment>) -> String {
    let rows = grid(table, sigma, Notation::Latex);
    let mut out = String::from(LATEX_PREAMBLE);
    out.push_str("\\[\n\\begin{array}{c|");
    out.push_str(&"c".repeat(ALL_ROOTS.len()));
    out.push_str("}\n");
    for (k, row) in rows.iter().enumerate() {
        out.push_str(&row.join(" & "));
        out.push_str(" \\\\\n");
        if k == 0 {
            out.push_str("\\hline\n");
        }
    }
    out.push_str("\\end{array}\n\\]\n");
    out.push_str(LATEX_END);
    out
}

/// One `lhs = rhs` line per formula.
pub fn formulas_ascii(formulas: &[CommutatorFormula], sigma: Option<SignAssignment>) -> String {
    formulas
        .iter()
        .map(|f| f.render_equation(sigma, Notation::Ascii) + "\n")
        .collect()
}

/// A standalone document with one boxed display per formula.
pub fn formulas_latex(formulas: &[CommutatorFormula], sigma: Option<SignAssignment>) -> String {
    let mut out = String::from(LATEX_PREAMBLE);
    for f in formulas {
        out.push_str(&format!(
            "\\[\n\\fbox{{${}$}}\n\\]\n",
            f.render_equation(sigma, Notation::Latex)
        ));
    }
    out.push_str(LATEX_END);
    out
}

#[derive(Serialize)]
struct TermRecord {
    i: u32,
    j: u32,
    target: Root,
    coeff: String,
}

#[derive(Serialize)]
struct FormulaRecord {
    left: Root,
    right: Root,
    terms: Vec<TermRecord>,
}

/// `[{left, right, terms: [{i, j, target, coeff}]}]` where `coeff` is the
/// commutator constant `C_{ij}`, not the signed argument coefficient.
pub fn formulas_json(formulas: &[CommutatorFormula], sigma: Option<SignAssignment>) -> String {
    let records: Vec<FormulaRecord> = formulas
        .iter()
        .map(|f| {
            let f = match sigma {
                Some(sigma) => f.specialize(sigma),
                None => f.clone(),
            };
            FormulaRecord {
                left: f.left,
                right: f.right,
                terms: f
                    .terms
                    .iter()
                    .map(|t| TermRecord {
                        i: t.i,
                        j: t.j,
                        target: t.target,
                        coeff: t.coeff.to_string(),
                    })
                    .collect(),
            }
        })
        .collect();
    let mut out = serde_json::to_string_pretty(&records).expect("records serialize");
    out.push('\n');
    out
}

/// Failure diffs, then the two summary lines.
pub fn report_ascii(report: &VerificationReport) -> String {
    let mut out = String::new();
    for r in report.relations.iter().filter(|r| !r.passed()) {
        for v in &r.violations {
            out.push_str(&format!("relation failure under {}: {v}\n", r.sigma));
        }
    }
    for (sigma, j) in report.jacobi.iter().filter(|(_, j)| !j.passed()) {
        for [x, y, z] in &j.violations {
            out.push_str(&format!("Jacobi failure under {sigma}: ({x}, {y}, {z})\n"));
        }
    }
    for c in report.checks.iter().filter(|c| !c.passed()) {
        let m = c.mismatch.as_ref().expect("failed check has a mismatch");
        out.push_str(&format!(
            "formula failure under {}: [x_{}(u), x_{}(t)] {m}\n",
            c.sigma, c.left, c.right
        ));
    }
    out.push_str(&report.relations_summary());
    out.push('\n');
    out.push_str(&report.summary());
    out.push('\n');
    out
}

#[derive(Serialize)]
struct CheckRecord {
    sigma: String,
    left: Root,
    right: Root,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct AssignmentRecord {
    sigma: String,
    relations: &'static str,
    relation_violations: Vec<String>,
    jacobi: &'static str,
}

#[derive(Serialize)]
struct ReportRecord {
    checks: Vec<CheckRecord>,
    assignments: Vec<AssignmentRecord>,
    relations: String,
    summary: String,
    passed: bool,
}

fn status(passed: bool) -> &'static str {
    if passed {
        "pass"
    } else {
        "fail"
    }
}

/// `{checks: [{sigma, left, right, status}], assignments, relations, summary, passed}`.
pub fn report_json(report: &VerificationReport) -> String {
    let record = ReportRecord {
        checks: report
            .checks
            .iter()
            .map(|c| CheckRecord {
                sigma: c.sigma.to_string(),
                left: c.left,
                right: c.right,
                status: status(c.passed()),
                detail: c.mismatch.as_ref().map(|m| m.to_string()),
            })
            .collect(),
        assignments: report
            .relations
            .iter()
            .zip(&report.jacobi)
            .map(|(r, (sigma, j))| AssignmentRecord {
                sigma: sigma.to_string(),
                relations: status(r.passed()),
                relation_violations: r.violations.iter().map(|v| v.to_string()).collect(),
                jacobi: status(j.passed()),
            })
            .collect(),
        relations: report.relations_summary(),
        summary: report.summary(),
        passed: report.passed(),
    };
    let mut out = serde_json::to_string_pretty(&record).expect("report serializes");
    out.push('\n');
    out
}

/// Per-assignment pass counts as a standalone document.
pub fn report_latex(report: &VerificationReport) -> String {
    let mut out = String::from(LATEX_PREAMBLE);
    out.push_str(
        "\\begin{tabular}{cccc}\n$\\sigma$ & relations & Jacobi & formulas \\\\\n\\hline\n",
    );
    for (r, (sigma, j)) in report.relations.iter().zip(&report.jacobi) {
        let checks: Vec<_> = report.checks.iter().filter(|c| c.sigma == *sigma).collect();
        let passed = checks.iter().filter(|c| c.passed()).count();
        out.push_str(&format!(
            "\\texttt{{{sigma}}} & {} & {} & {passed}/{} \\\\\n",
            status(r.passed()),
            status(j.passed()),
            checks.len()
        ));
    }
    out.push_str("\\end{tabular}\n\n");
    out.push_str(&format!(
        "{}\n\n{}\n",
        report.relations_summary(),
        report.summary()
    ));
    out.push_str(LATEX_END);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutators::{all_formulas, formula};
    use crate::constants::{solve, Seeds};

    fn table() -> ConstantTable {
        solve(&Seeds::symbolic()).unwrap()
    }

    #[test]
    fn json_table_keys() {
        let text = table_json(&table(), None);
        let parsed: Map<String, Value> = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.len(), 60);
        assert_eq!(parsed["a+b|2a+b"], "-3ε5");
        assert_eq!(parsed.keys().next().unwrap(), "-3a-2b|b");
        let plus: Map<String, Value> =
            serde_json::from_str(&table_json(&table(), Some(SignAssignment::ALL_PLUS))).unwrap();
        assert_eq!(plus["a+b|2a+b"], "-3");
    }

    #[test]
    fn grid_layout() {
        let csv = table_csv(&table(), Some(SignAssignment::ALL_PLUS));
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines.len(), 13);
        assert_eq!(
            lines[0],
            "N,-3a-2b,-3a-b,-2a-b,-a-b,-a,-b,a,b,a+b,2a+b,3a+b,3a+2b"
        );
        assert_eq!(lines[1], "-3a-2b,,,,,,,,1,-1,1,-1,");
        let ascii = table_ascii(&table(), None);
        assert!(ascii.lines().nth(1).unwrap().contains("-e5"));
        assert_eq!(ascii.lines().count(), 13);
    }

    #[test]
    fn latex_documents() {
        let t = table();
        let doc = table_latex(&t, None);
        assert!(doc.starts_with("\\documentclass"));
        assert!(doc.contains("-3\\epsilon_5"));
        assert!(doc.ends_with(LATEX_END));
        let f = formula(&t, "b".parse().unwrap(), "a".parse().unwrap()).unwrap();
        let boxed = formulas_latex(&[f], None);
        assert!(boxed.contains("\\fbox{$[x_b(u),x_a(t)]=x_{a+b}(-\\epsilon_1tu)"));
    }

    #[test]
    fn json_formulas() {
        let t = table();
        let text = formulas_json(&all_formulas(&t).unwrap(), None);
        let parsed: Vec<Value> = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed.len(), 60);
        let f = formula(&t, "b".parse().unwrap(), "a".parse().unwrap()).unwrap();
        let one: Vec<Value> = serde_json::from_str(&formulas_json(&[f], None)).unwrap();
        assert_eq!(one[0]["left"], "b");
        assert_eq!(
            one[0]["terms"][0],
            serde_json::json!({"i": 1, "j": 1, "target": "a+b", "coeff": "ε1"})
        );
        assert_eq!(one[0]["terms"][3]["coeff"], "ε2ε5");
    }
}
