//! Structured verification reports shared by every theorem check and the CLI.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::exactlin::{format_scalar, Field, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotApplicable,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::NotApplicable => "not-applicable",
        }
    }
}

/// A named boolean outcome.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub name: String,
    pub holds: bool,
}

/// A subspace rendered as canonical RREF rows of exact fractions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceRecord {
    pub name: String,
    pub ambient_dim: usize,
    pub basis: Vec<Vec<String>>,
}

impl SubspaceRecord {
    pub fn new<F: Field>(name: impl Into<String>, s: &Subspace<F>) -> Self {
        SubspaceRecord {
            name: name.into(),
            ambient_dim: s.ambient_dim(),
            basis: s
                .basis_vectors()
                .iter()
                .map(|row| row.iter().map(format_scalar).collect())
                .collect(),
        }
    }

    fn render_basis(&self) -> String {
        let rows: Vec<String> = self
            .basis
            .iter()
            .map(|r| format!("[{}]", r.join(", ")))
            .collect();
        format!("[{}]", rows.join(", "))
    }
}

/// A non-boolean result such as a dimension or a method name.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: String,
}

/// Outcome of one theorem or identity check.
///
/// `premises` gate applicability, `verdicts` are the assertions that must
/// hold for a pass, and `facts` are computed booleans reported without a
/// required value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub field: String,
    pub status: Status,
    pub premises: Vec<Verdict>,
    pub verdicts: Vec<Verdict>,
    pub facts: Vec<Verdict>,
    #[serde(default)]
    pub values: Vec<NamedValue>,
    pub subspaces: Vec<SubspaceRecord>,
    pub witnesses: Vec<String>,
    pub notices: Vec<String>,
}

impl VerificationReport {
    pub fn new<F: Field>(check: impl Into<String>) -> Self {
        VerificationReport {
            check: check.into(),
            field: F::descriptor().to_string(),
            status: Status::Pass,
            premises: Vec::new(),
            verdicts: Vec::new(),
            facts: Vec::new(),
            values: Vec::new(),
            subspaces: Vec::new(),
            witnesses: Vec::new(),
            notices: Vec::new(),
        }
    }

    pub fn premise(&mut self, name: impl Into<String>, holds: bool) -> &mut Self {
        self.premises.push(Verdict {
            name: name.into(),
            holds,
        });
        self
    }

    pub fn verdict(&mut self, name: impl Into<String>, holds: bool) -> &mut Self {
        self.verdicts.push(Verdict {
            name: name.into(),
            holds,
        });
        self
    }

    pub fn fact(&mut self, name: impl Into<String>, holds: bool) -> &mut Self {
        self.facts.push(Verdict {
            name: name.into(),
            holds,
        });
        self
    }

    pub fn value(&mut self, name: impl Into<String>, value: impl std::fmt::Display) -> &mut Self {
        self.values.push(NamedValue {
            name: name.into(),
            value: value.to_string(),
        });
        self
    }

    pub fn subspace<F: Field>(&mut self, name: impl Into<String>, s: &Subspace<F>) -> &mut Self {
        self.subspaces.push(SubspaceRecord::new(name, s));
        self
    }

    pub fn witness(&mut self, w: impl Into<String>) -> &mut Self {
        self.witnesses.push(w.into());
        self
    }

    pub fn notice(&mut self, n: impl Into<String>) -> &mut Self {
        self.notices.push(n.into());
        self
    }

    /// Derives the status: not applicable if a premise fails, otherwise a
    /// pass iff every verdict holds.
    pub fn settle(&mut self) -> &mut Self {
        self.status = if self.premises.iter().any(|p| !p.holds) {
            Status::NotApplicable
        } else if self.verdicts.iter().all(|v| v.holds) {
            Status::Pass
        } else {
            Status::Fail
        };
        self
    }

    pub fn finish(mut self) -> Self {
        self.settle();
        self
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn verdict_value(&self, name: &str) -> Option<bool> {
        self.verdicts
            .iter()
            .chain(&self.facts)
            .chain(&self.premises)
            .find(|v| v.name == name)
            .map(|v| v.holds)
    }

    pub fn subspace_record(&self, name: &str) -> Option<&SubspaceRecord> {
        self.subspaces.iter().find(|s| s.name == name)
    }

    /// Line-oriented text rendering; every line is `kind name: value`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "check: {}", self.check);
        let _ = writeln!(out, "field: {}", self.field);
        let _ = writeln!(out, "status: {}", self.status.as_str());
        for p in &self.premises {
            let _ = writeln!(out, "premise {}: {}", p.name, p.holds);
        }
        for v in &self.verdicts {
            let _ = writeln!(out, "verdict {}: {}", v.name, v.holds);
        }
        for v in &self.facts {
            let _ = writeln!(out, "fact {}: {}", v.name, v.holds);
        }
        for v in &self.values {
            let _ = writeln!(out, "value {}: {}", v.name, v.value);
        }
        for s in &self.subspaces {
            let _ = writeln!(
                out,
                "subspace {} (ambient {}): {}",
                s.name,
                s.ambient_dim,
                s.render_basis()
            );
        }
        for w in &self.witnesses {
            let _ = writeln!(out, "witness: {w}");
        }
        for n in &self.notices {
            let _ = writeln!(out, "notice: {n}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn status_rules() {
        let mut r = VerificationReport::new::<BigRational>("t");
        r.verdict("a", true).fact("b", false);
        assert_eq!(r.clone().finish().status, Status::Pass);
        r.verdict("c", false);
        assert_eq!(r.clone().finish().status, Status::Fail);
        r.premise("p", false);
        assert_eq!(r.finish().status, Status::NotApplicable);
    }

    #[test]
    fn text_rendering_lists_fractions() {
        let s = Subspace::<BigRational>::from_i64(2, &[&[2, 1]]);
        let mut r = VerificationReport::new::<BigRational>("t");
        r.subspace("s", &s);
        assert!(r.to_text().contains("subspace s (ambient 2): [[1, 1/2]]"));
    }
}
