//! Batch classification of a corpus over a worker pool.

use std::collections::HashSet;
use std::path::{Path, PathBuf};

use explab_core::classify::full_report;
use explab_core::Config;
use rayon::prelude::*;

use crate::corpus::CorpusEntry;
use crate::views::{BatchSummary, EntryResult, EntryStatus, PinFailure};
use crate::Diagnostic;

struct Outcome {
    result: EntryResult,
    mismatches: Vec<String>,
}

fn run_entry(entry: &CorpusEntry, config: &Config, signed: bool) -> Outcome {
    let pins = entry.expected.clone().unwrap_or_default();
    let computed = entry.to_polynomial().and_then(|f| full_report(&f, config));
    match computed {
        Ok(report) => Outcome {
            mismatches: pins.check_report(&report),
            result: EntryResult {
                id: entry.id.clone(),
                status: EntryStatus::Classified,
                routes_agree: Some(report.routes.all_agree()),
                report: Some(report.to_json(signed)),
                diagnostic: None,
            },
        },
        Err(err) => {
            let status = if err.is_inadmissible() { EntryStatus::Inadmissible } else { EntryStatus::Internal };
            let mismatches = if entry.expected.is_some() && pins.error.is_some() {
                pins.check_error(err.kind())
            } else if entry.expected.is_some() {
                vec![format!("unexpected error {}", err.kind())]
            } else {
                Vec::new()
            };
            Outcome {
                mismatches,
                result: EntryResult {
                    id: entry.id.clone(),
                    status,
                    routes_agree: None,
                    report: None,
                    diagnostic: Some(Diagnostic::from_error(Some(&entry.polynomial), &err)),
                },
            }
        }
    }
}

/// Classifies every entry with `jobs` workers (0 means one per core). Results keep corpus order,
/// so the summary does not depend on `jobs`.
pub fn run_batch(entries: &[CorpusEntry], config: &Config, jobs: usize, signed: bool) -> Result<BatchSummary, String> {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().map_err(|e| e.to_string())?;
    let outcomes: Vec<Outcome> = pool.install(|| entries.par_iter().map(|e| run_entry(e, config, signed)).collect());

    let mut summary = BatchSummary {
        entries: entries.len(),
        classified: 0,
        inadmissible: 0,
        internal_errors: 0,
        route_failures: 0,
        pin_failures: Vec::new(),
        results: Vec::with_capacity(outcomes.len()),
    };
    for outcome in outcomes {
        match outcome.result.status {
            EntryStatus::Classified => summary.classified += 1,
            EntryStatus::Inadmissible => summary.inadmissible += 1,
            EntryStatus::Internal => summary.internal_errors += 1,
        }
        if outcome.result.routes_agree == Some(false) {
            summary.route_failures += 1;
        }
        if !outcome.mismatches.is_empty() {
            summary.pin_failures.push(PinFailure { id: outcome.result.id.clone(), mismatches: outcome.mismatches });
        }
        summary.results.push(outcome.result);
    }
    Ok(summary)
}

/// File stem for an entry id: characters outside `[A-Za-z0-9._-]` become `_`.
pub fn sanitize_id(id: &str) -> String {
    let s: String =
        id.chars().map(|c| if c.is_ascii_alphanumeric() || matches!(c, '.' | '_' | '-') { c } else { '_' }).collect();
    if s.is_empty() || s.starts_with('.') {
        format!("_{s}")
    } else {
        s
    }
}

/// Writes one JSON file per entry (report or diagnostic) and drops the embedded payloads from
/// the summary. Ids that collide after sanitizing get their corpus index appended.
pub fn write_reports(summary: &mut BatchSummary, dir: &Path) -> std::io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut used = HashSet::new();
    let mut written = Vec::new();
    for (index, result) in summary.results.iter_mut().enumerate() {
        let mut stem = sanitize_id(&result.id);
        if !used.insert(stem.clone()) {
            stem = format!("{stem}-{index}");
            used.insert(stem.clone());
        }
        let path = dir.join(format!("{stem}.json"));
        let body = match (&result.report, &result.diagnostic) {
            (Some(r), _) => serde_json::to_string_pretty(r),
            (None, Some(d)) => serde_json::to_string_pretty(d),
            (None, None) => continue,
        }
        .map_err(std::io::Error::other)?;
        std::fs::write(&path, body + "\n")?;
        result.report = None;
        result.diagnostic = None;
        written.push(path);
    }
    Ok(written)
}
