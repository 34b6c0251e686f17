//! Pass/fail records for exact identity checks.

use crate::linalg::{Matrix, Rational};

/// The first basis element on which two sides of an identity disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub basis_index: usize,
    pub residual: Vec<Rational>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckEntry {
    pub axiom: String,
    pub indices: Vec<usize>,
    pub passed: bool,
    pub witness: Option<Witness>,
}

/// Ordered list of identity checks. Passes iff every entry passes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub checks: Vec<CheckEntry>,
}

impl AxiomReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn first_failure(&self) -> Option<&CheckEntry> {
        self.failures().next()
    }

    /// Records `lhs == rhs` as an exact matrix identity.
    pub fn compare(&mut self, axiom: &str, indices: &[usize], lhs: &Matrix, rhs: &Matrix) {
        let witness = lhs
            .first_difference(rhs)
            .map(|(basis_index, residual)| Witness { basis_index, residual });
        self.checks.push(CheckEntry {
            axiom: axiom.to_string(),
            indices: indices.to_vec(),
            passed: witness.is_none(),
            witness,
        });
    }

    /// Records a yes/no fact that has no residual vector.
    pub fn assert(&mut self, axiom: &str, indices: &[usize], ok: bool) {
        self.checks.push(CheckEntry {
            axiom: axiom.to_string(),
            indices: indices.to_vec(),
            passed: ok,
            witness: None,
        });
    }

    pub fn extend(&mut self, other: AxiomReport) {
        self.checks.extend(other.checks);
    }

    pub fn entries_for<'a>(&'a self, axiom: &'a str) -> impl Iterator<Item = &'a CheckEntry> + 'a {
        self.checks.iter().filter(move |c| c.axiom == axiom)
    }
}
