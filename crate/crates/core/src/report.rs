//! The full verification run: relations, Jacobi and the commutator oracle for
//! a list of sign assignments.

use crate::adjoint::{
    build_algebra, jacobi_check, verify_all_formulas, FormulaCheck, JacobiReport,
};
use crate::constants::{verify_relations, ConstantTable, RelationReport};
use crate::error::Result;
use crate::signs::SignAssignment;

#[derive(Debug, Clone)]
pub struct VerificationReport {
    /// One per assignment, in input order.
    pub relations: Vec<RelationReport>,
    pub jacobi: Vec<(SignAssignment, JacobiReport)>,
    /// Ordered by assignment, then formula.
    pub checks: Vec<FormulaCheck>,
}

pub fn run_verification(
    table: &ConstantTable,
    sigmas: &[SignAssignment],
) -> Result<VerificationReport> {
    let relations = sigmas.iter().map(|&s| verify_relations(table, s)).collect();
    let jacobi = sigmas
        .iter()
        .map(|&s| Ok((s, jacobi_check(&build_algebra(table, s)?))))
        .collect::<Result<Vec<_>>>()?;
    let checks = verify_all_formulas(table, sigmas)?;
    Ok(VerificationReport {
        relations,
        jacobi,
        checks,
    })
}

impl VerificationReport {
    pub fn formulas_passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed()).count()
    }

    pub fn jacobi_passed(&self) -> usize {
        self.jacobi.iter().filter(|(_, j)| j.passed()).count()
    }

    pub fn relations_passed(&self) -> usize {
        self.relations.iter().filter(|r| r.passed()).count()
    }

    pub fn passed(&self) -> bool {
        self.formulas_passed() == self.checks.len()
            && self.jacobi_passed() == self.jacobi.len()
            && self.relations_passed() == self.relations.len()
    }

    /// e.g. `960/960 formulas verified, 16/16 Jacobi passes`.
    pub fn summary(&self) -> String {
        format!(
            "{}/{} formulas verified, {}/{} Jacobi passes",
            self.formulas_passed(),
            self.checks.len(),
            self.jacobi_passed(),
            self.jacobi.len()
        )
    }

    /// Relation pass count with the per-assignment instance counts.
    pub fn relations_summary(&self) -> String {
        let counts = self
            .relations
            .first()
            .map(|r| {
                format!(
                    " ({} antisymmetry, {} triple, {} opposite, {} quadruple instances each)",
                    r.antisymmetry_checked,
                    r.triples_checked,
                    r.opposite_checked,
                    r.quadruples_checked
                )
            })
            .unwrap_or_default();
        format!(
            "{}/{} relation passes{counts}",
            self.relations_passed(),
            self.relations.len()
        )
    }
}
