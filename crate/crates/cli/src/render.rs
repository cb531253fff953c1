//! Tabular renderings (`--format table` and `--format csv`).

use explab_core::classify::ClassificationReport;
use explab_core::thom_sebastiani::TsVerification;

use crate::views::{BatchSummary, EntryStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Table,
    Csv,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table { headers: headers.iter().map(|h| h.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    /// Columns padded to their widest cell, separated by two spaces.
    pub fn aligned(&self) -> String {
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string()
        };
        let mut out = line(&self.headers);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }

    pub fn csv(&self) -> String {
        let mut writer = csv::Writer::from_writer(Vec::new());
        writer.write_record(&self.headers).expect("in-memory write");
        for row in &self.rows {
            writer.write_record(row).expect("in-memory write");
        }
        String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv(),
            _ => self.aligned(),
        }
    }
}

fn field_table(fields: Vec<(&str, String)>) -> Table {
    let mut t = Table::new(&["field", "value"]);
    for (k, v) in fields {
        t.push(vec![k.to_string(), v]);
    }
    t
}

fn weights_text(r: &ClassificationReport) -> String {
    match &r.weights {
        Some(w) => {
            let parts: Vec<String> = w.weights().iter().map(explab_core::poly::rational::format_rational).collect();
            format!("({})", parts.join(", "))
        }
        None => "-".to_string(),
    }
}

pub fn report_table(r: &ClassificationReport) -> Table {
    field_table(vec![
        ("input", r.input.clone()),
        ("polynomial", r.polynomial.to_string()),
        ("variables", r.polynomial.variables().join(",")),
        ("weights", weights_text(r)),
        ("milnor", r.milnor.to_string()),
        ("alpha_tilde", r.alpha.to_text()),
        ("maxDuBois", r.max_du_bois.to_string()),
        ("maxRational", r.max_rational.to_string()),
        ("spectrum", r.spectrum.to_string()),
        ("checkedUpTo", r.checked_up_to.to_string()),
        ("routesAgree", r.routes.all_agree().to_string()),
        ("corollariesHold", r.corollaries_hold.to_string()),
    ])
}

pub fn spectra_table(reports: &[ClassificationReport]) -> Table {
    let mut t = Table::new(&["label", "input", "milnor", "alpha_tilde", "spectrum"]);
    for (i, r) in reports.iter().enumerate() {
        t.push(vec![format!("p{i}"), r.input.clone(), r.milnor.to_string(), r.alpha.to_text(), r.spectrum.to_string()]);
    }
    t
}

pub fn join_table(v: &TsVerification) -> Table {
    field_table(vec![
        ("joined", v.joined.polynomial.to_string()),
        ("boundDuBois", v.bound.du_bois.to_string()),
        ("boundRational", v.bound.rational.to_string()),
        ("actualDuBois", v.joined.max_du_bois.to_string()),
        ("actualRational", v.joined.max_rational.to_string()),
        ("alpha_first", v.first.alpha.to_text()),
        ("alpha_second", v.second.alpha.to_text()),
        ("alpha_joined", v.joined.alpha.to_text()),
        ("convolutionMatches", v.convolution_matches.to_string()),
        ("alphaAdditive", v.alpha_additive.to_string()),
        ("milnorMultiplicative", v.milnor_multiplicative.to_string()),
        ("levelsMeetBound", v.levels_meet_bound.to_string()),
        ("verified", v.verified().to_string()),
    ])
}

pub fn batch_table(s: &BatchSummary) -> Table {
    let mut t = Table::new(&[
        "id",
        "status",
        "milnor",
        "alpha_tilde",
        "maxDuBois",
        "maxRational",
        "routesAgree",
        "pins",
        "error",
    ]);
    for r in &s.results {
        let status = match r.status {
            EntryStatus::Classified => "classified",
            EntryStatus::Inadmissible => "inadmissible",
            EntryStatus::Internal => "internal",
        };
        let pins = if s.pin_failures.iter().any(|p| p.id == r.id) { "FAIL" } else { "ok" };
        let cells = match &r.report {
            Some(rep) => vec![
                rep.milnor.to_string(),
                rep.alpha_tilde.to_text(),
                rep.max_du_bois.to_string(),
                rep.max_rational.to_string(),
            ],
            None => vec!["-".into(); 4],
        };
        let mut row = vec![r.id.clone(), status.to_string()];
        row.extend(cells);
        row.push(r.routes_agree.map_or("-".to_string(), |b| b.to_string()));
        row.push(pins.to_string());
        row.push(r.diagnostic.as_ref().map_or("-".to_string(), |d| d.error.clone()));
        t.push(row);
    }
    t
}

pub fn diagnostic_table(d: &crate::Diagnostic) -> Table {
    let mut fields = Vec::new();
    if let Some(input) = &d.input {
        fields.push(("input", input.clone()));
    }
    fields.push(("error", d.error.clone()));
    fields.push(("message", d.message.clone()));
    field_table(fields)
}
