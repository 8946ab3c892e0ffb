use std::fmt::Write;

use leibniz::report::VerificationReport;
use serde::Serialize;

/// An algebra attached to the output, in the algebra file format.
#[derive(Debug, Clone, Serialize)]
pub struct AlgebraRecord {
    pub name: String,
    pub text: String,
}

/// What every verb prints: a report, plus sub-reports for `verify` and
/// algebra tables for verbs that build new algebras.
#[derive(Debug, Clone, Serialize)]
pub struct Output {
    #[serde(flatten)]
    pub report: VerificationReport,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub sections: Vec<VerificationReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub algebras: Vec<AlgebraRecord>,
}

impl Output {
    pub fn new(report: VerificationReport) -> Self {
        Output {
            report,
            sections: Vec::new(),
            algebras: Vec::new(),
        }
    }

    pub fn with_algebra(mut self, name: &str, text: String) -> Self {
        self.algebras.push(AlgebraRecord {
            name: name.to_string(),
            text,
        });
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = self.report.to_text();
        for s in &self.sections {
            out.push_str("\n[section]\n");
            out.push_str(&s.to_text());
        }
        for a in &self.algebras {
            let _ = writeln!(out, "\n[algebra {}]", a.name);
            out.push_str(&a.text);
        }
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("output serializes")
    }
}
