//! Corpus of tabulated knots with expected invariants, and batch verification.

use crate::coloring::signatures;
use crate::diagram::{parse_gauss_code, Diagram};
use crate::error::{Error, Result};
use crate::khovanov::{graded_euler_characteristic, khovanov, BuilderKind, KhPolynomial};
use crate::lee::rasmussen;
use crate::oracle::bracket_oracle;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::time::Instant;

/// The corpus shipped with the crate.
pub const SHIPPED_CORPUS: &str = include_str!("../data/corpus.json");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryStatus {
    Sourced,
    Skipped,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    /// (σ_ξ*, σ_ξ) as tabulated.
    #[serde(default)]
    pub sigma_pair: Option<[i64; 2]>,
    #[serde(default)]
    pub rasmussen: Option<i64>,
    #[serde(default)]
    pub kh_polynomial: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusEntry {
    pub name: String,
    pub gauss_code: Option<String>,
    #[serde(default)]
    pub classical: bool,
    #[serde(default)]
    pub expected: Expected,
    pub status: EntryStatus,
    /// Where the Gauss code came from.
    #[serde(default)]
    pub source: Option<String>,
}

impl CorpusEntry {
    /// The diagram, or `None` for rows without a code.
    pub fn diagram(&self) -> Option<Result<Diagram>> {
        match (self.status, &self.gauss_code) {
            (EntryStatus::Sourced, Some(code)) => Some(parse_gauss_code(code)),
            _ => None,
        }
    }
}

pub fn parse_corpus(json: &str) -> Result<Vec<CorpusEntry>> {
    let entries: Vec<CorpusEntry> =
        serde_json::from_str(json).map_err(|e| Error::Corpus(e.to_string()))?;
    for e in &entries {
        if e.status == EntryStatus::Sourced && e.gauss_code.is_none() {
            return Err(Error::Corpus(format!(
                "entry {} is sourced but has no code",
                e.name
            )));
        }
    }
    Ok(entries)
}

pub fn shipped_corpus() -> Vec<CorpusEntry> {
    parse_corpus(SHIPPED_CORPUS).expect("shipped corpus is valid")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FieldCheck {
    pub field: String,
    pub ok: bool,
    pub expected: String,
    pub got: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntryReport {
    pub name: String,
    pub outcome: Outcome,
    pub checks: Vec<FieldCheck>,
    /// Set when the pipeline itself errored.
    pub error: Option<String>,
    /// Set when the pipeline error was an internal invariant violation.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub internal: bool,
    pub millis: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    pub entries: Vec<EntryReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub millis: f64,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn entry(&self, name: &str) -> Option<&EntryReport> {
        self.entries.iter().find(|e| e.name == name)
    }
}

fn check(field: &str, expected: String, got: String) -> FieldCheck {
    FieldCheck {
        field: field.into(),
        ok: expected == got,
        expected,
        got,
    }
}

fn compute_checks(e: &CorpusEntry, d: &Diagram, builder: BuilderKind) -> Result<Vec<FieldCheck>> {
    let mut out = Vec::new();
    let kh = khovanov(d, builder)?;
    out.push(check(
        "euler_characteristic",
        bracket_oracle(d)?.to_string(),
        graded_euler_characteristic(&kh).to_string(),
    ));
    if let Some(text) = &e.expected.kh_polynomial {
        let want = KhPolynomial::parse(text)?;
        out.push(check("kh_polynomial", want.to_string(), kh.to_string()));
    }
    if let Some([a, b]) = e.expected.sigma_pair {
        let got = signatures(d)?.sorted();
        out.push(check(
            "sigma_pair",
            format!("{:?}", (a.min(b), a.max(b))),
            format!("{got:?}"),
        ));
    }
    if let Some(s) = e.expected.rasmussen {
        out.push(check(
            "rasmussen",
            s.to_string(),
            rasmussen(d)?.s.to_string(),
        ));
    }
    Ok(out)
}

/// Recomputes every expected field of one entry. Never panics on bad data.
pub fn verify_entry(e: &CorpusEntry, builder: BuilderKind) -> EntryReport {
    let start = Instant::now();
    let mut report = EntryReport {
        name: e.name.clone(),
        outcome: Outcome::Skipped,
        checks: Vec::new(),
        error: None,
        internal: false,
        millis: 0.0,
    };
    let Some(parsed) = e.diagram() else {
        return report;
    };
    match parsed.and_then(|d| compute_checks(e, &d, builder)) {
        Ok(checks) => {
            report.outcome = if checks.iter().all(|c| c.ok) {
                Outcome::Pass
            } else {
                Outcome::Fail
            };
            report.checks = checks;
        }
        Err(err) => {
            report.outcome = Outcome::Fail;
            report.internal = matches!(err, Error::Internal(_));
            report.error = Some(err.to_string());
        }
    }
    report.millis = start.elapsed().as_secs_f64() * 1e3;
    report
}

/// Verifies all entries in parallel; the report keeps corpus order.
pub fn verify_corpus(entries: &[CorpusEntry], builder: BuilderKind) -> VerifyReport {
    let start = Instant::now();
    let reports: Vec<EntryReport> = entries
        .par_iter()
        .map(|e| verify_entry(e, builder))
        .collect();
    let count = |o| reports.iter().filter(|r| r.outcome == o).count();
    VerifyReport {
        passed: count(Outcome::Pass),
        failed: count(Outcome::Fail),
        skipped: count(Outcome::Skipped),
        entries: reports,
        millis: start.elapsed().as_secs_f64() * 1e3,
    }
}
