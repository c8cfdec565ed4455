//! Pass/fail verdicts with counterexample witnesses.

use std::fmt;

use crate::gvs::GradedSpace;
use crate::linalg::Vector;
use crate::scalar::Field;

/// A failing basis tuple with both evaluated sides of the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tuple: Vec<usize>,
    pub labels: Vec<String>,
    pub lhs: String,
    pub rhs: String,
}

impl Witness {
    pub fn new(tuple: Vec<usize>, labels: Vec<String>, lhs: String, rhs: String) -> Self {
        Witness {
            tuple,
            labels,
            lhs,
            rhs,
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}): {} != {}", self.labels.join(", "), self.lhs, self.rhs)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
    /// Not evaluated, with the reason.
    Skipped(String),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Verdict::Fail(w) => Some(w),
            _ => None,
        }
    }

    pub fn from_first_failure(w: Option<Witness>) -> Self {
        w.map_or(Verdict::Pass, Verdict::Fail)
    }
}

/// A named verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub verdict: Verdict,
}

/// An ordered collection of named verdicts.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, name: impl Into<String>, verdict: Verdict) {
        self.checks.push(Check {
            name: name.into(),
            verdict,
        });
    }

    pub fn with(mut self, name: impl Into<String>, verdict: Verdict) -> Self {
        self.push(name, verdict);
        self
    }

    pub fn extend(&mut self, prefix: &str, other: Report) {
        for c in other.checks {
            self.push(format!("{prefix}{}", c.name), c.verdict);
        }
    }

    pub fn get(&self, name: &str) -> Option<&Verdict> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.verdict)
    }

    /// True when no check failed. Skipped checks do not count as failures.
    pub fn passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| !matches!(c.verdict, Verdict::Fail(_)))
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks
            .iter()
            .find(|c| matches!(c.verdict, Verdict::Fail(_)))
    }
}

/// Renders `v` as `{name: coeff, ...}` over the basis of `space`, or `0`.
pub fn render_vector<F: Field>(space: &GradedSpace, v: &Vector<F>) -> String {
    let terms: Vec<String> = v
        .support()
        .map(|(i, c)| format!("{}: {}", space.name(i), c))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        format!("{{{}}}", terms.join(", "))
    }
}

/// Basis names for a tuple of indices into `space`.
pub fn labels(space: &GradedSpace, tuple: &[usize]) -> Vec<String> {
    tuple.iter().map(|&i| space.name(i).to_string()).collect()
}

/// Witness for a vector identity `lhs = rhs` in `target` at a basis tuple of `source`.
pub fn vector_witness<F: Field>(
    source: &GradedSpace,
    target: &GradedSpace,
    tuple: &[usize],
    lhs: &Vector<F>,
    rhs: &Vector<F>,
) -> Option<Witness> {
    if lhs == rhs {
        None
    } else {
        Some(Witness::new(
            tuple.to_vec(),
            labels(source, tuple),
            render_vector(target, lhs),
            render_vector(target, rhs),
        ))
    }
}
