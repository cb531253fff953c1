//! Line-delimited JSON corpora.

use std::collections::HashSet;
use std::path::Path;

use explab_core::classify::ClassificationReport;
use explab_core::{parse, poly::infer_variables, Level, Polynomial};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusEntry {
    pub id: String,
    pub polynomial: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variables: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<Expected>,
}

/// Values an entry is pinned to. Absent fields are not checked.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub milnor: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha_tilde: Option<String>,
    #[serde(default, rename = "maxDuBois", skip_serializing_if = "Option::is_none")]
    pub max_du_bois: Option<serde_json::Value>,
    #[serde(default, rename = "maxRational", skip_serializing_if = "Option::is_none")]
    pub max_rational: Option<serde_json::Value>,
    #[serde(default, rename = "routesAgree", skip_serializing_if = "Option::is_none")]
    pub routes_agree: Option<bool>,
    /// Diagnostic kind the entry must fail with, e.g. `NotQuasiHomogeneous`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("cannot read corpus {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: duplicate id `{id}`")]
    DuplicateId { line: usize, id: String },
}

/// Parses corpus text: one JSON object per line, blank lines ignored.
pub fn parse_corpus(text: &str) -> Result<Vec<CorpusEntry>, CorpusError> {
    let mut seen = HashSet::new();
    let mut entries = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        if line.trim().is_empty() {
            continue;
        }
        let entry: CorpusEntry =
            serde_json::from_str(line).map_err(|e| CorpusError::Malformed { line: line_no, message: e.to_string() })?;
        if !seen.insert(entry.id.clone()) {
            return Err(CorpusError::DuplicateId { line: line_no, id: entry.id });
        }
        entries.push(entry);
    }
    Ok(entries)
}

pub fn load_corpus(path: &Path) -> Result<Vec<CorpusEntry>, CorpusError> {
    let text =
        std::fs::read_to_string(path).map_err(|source| CorpusError::Io { path: path.display().to_string(), source })?;
    parse_corpus(&text)
}

impl CorpusEntry {
    pub fn to_polynomial(&self) -> explab_core::Result<Polynomial> {
        let vars = match &self.variables {
            Some(v) => v.clone(),
            None => infer_variables(&self.polynomial)?,
        };
        Ok(parse(&self.polynomial, &vars)?)
    }
}

fn level_matches(pin: &serde_json::Value, level: Level) -> bool {
    match (pin, level) {
        (serde_json::Value::Number(n), Level::Finite(k)) => n.as_i64() == Some(k),
        (serde_json::Value::String(s), Level::Unbounded) => s == "inf",
        _ => false,
    }
}

impl Expected {
    /// Human-readable mismatches between the pins and a computed report.
    pub fn check_report(&self, report: &ClassificationReport) -> Vec<String> {
        let mut out = Vec::new();
        if let Some(mu) = self.milnor {
            if mu != report.milnor {
                out.push(format!("milnor: expected {mu}, got {}", report.milnor));
            }
        }
        if let Some(alpha) = &self.alpha_tilde {
            let got = report.alpha.to_text();
            let same = match (explab_core::poly::rational::parse_rational(alpha), report.alpha.finite()) {
                (Some(a), Some(b)) => &a == b,
                _ => alpha == &got,
            };
            if !same {
                out.push(format!("alpha_tilde: expected {alpha}, got {got}"));
            }
        }
        if let Some(pin) = &self.max_du_bois {
            if !level_matches(pin, report.max_du_bois) {
                out.push(format!("maxDuBois: expected {pin}, got {}", report.max_du_bois));
            }
        }
        if let Some(pin) = &self.max_rational {
            if !level_matches(pin, report.max_rational) {
                out.push(format!("maxRational: expected {pin}, got {}", report.max_rational));
            }
        }
        if let Some(agree) = self.routes_agree {
            if agree != report.routes.all_agree() {
                out.push(format!("routesAgree: expected {agree}, got {}", report.routes.all_agree()));
            }
        }
        if let Some(kind) = &self.error {
            out.push(format!("error: expected {kind}, but the entry classified"));
        }
        out
    }

    pub fn check_error(&self, kind: &str) -> Vec<String> {
        match &self.error {
            Some(expected) if expected == kind => Vec::new(),
            Some(expected) => vec![format!("error: expected {expected}, got {kind}")],
            None => vec![format!("unexpected error {kind}")],
        }
    }
}
