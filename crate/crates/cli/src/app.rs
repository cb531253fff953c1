//! Argument definitions and verb dispatch. `run` returns the streams and exit code instead of
//! printing so the verbs can be exercised in-process.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use explab_core::classify::{full_report, ClassificationReport};
use explab_core::thom_sebastiani::ts_verify;
use explab_core::{parse, poly::infer_variables, Config, Polynomial};
use serde::Serialize;

use crate::render::{self, Format};
use crate::views::{JoinJson, SpectraJson};
use crate::{batch, corpus, exit, schema, settings, Diagnostic};

#[derive(Debug, Parser)]
#[command(
    name = "explab",
    version,
    about = "Minimal exponents and k-Du Bois / k-rational levels of quasi-homogeneous germs"
)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
    /// Monomial order for Gröbner computations (grevlex, lex, grlex). Overrides EXPLAB_ORDER.
    #[arg(long, global = true)]
    pub order: Option<String>,
    /// S-pair budget per Gröbner computation. Overrides EXPLAB_BUDGET.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    /// Report byDegree with the (-1)^k twist applied.
    #[arg(long, global = true)]
    pub signed_classes: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify one germ.
    Classify {
        polynomial: String,
        /// Comma-separated variables; defaults to identifiers in order of appearance.
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Spectra of one or more germs and the class of their union.
    Spectrum {
        #[arg(required = true)]
        polynomials: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        vars: Option<Vec<String>>,
    },
    /// Thom–Sebastiani join of two germs, checked against the convolution of their spectra.
    Join {
        first: String,
        second: String,
        #[arg(long, value_delimiter = ',')]
        vars1: Option<Vec<String>>,
        #[arg(long, value_delimiter = ',')]
        vars2: Option<Vec<String>>,
    },
    /// Classify every entry of a line-delimited JSON corpus.
    Batch {
        corpus: PathBuf,
        /// Worker threads; 0 uses one per core.
        #[arg(long, default_value_t = 0)]
        jobs: usize,
        /// Write one report per entry here instead of embedding them in the summary.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Print a published JSON schema, or list them.
    Schema {
        #[arg(value_parser = clap::builder::PossibleValuesParser::new(schema::names()))]
        name: Option<String>,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String, code: i32) -> Self {
        Output { stdout, stderr: String::new(), code }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("serializable payload") + "\n"
}

fn parse_input(text: &str, vars: Option<&[String]>) -> explab_core::Result<Polynomial> {
    let vars = match vars {
        Some(v) => v.to_vec(),
        None => infer_variables(text)?,
    };
    Ok(parse(text, &vars)?)
}

fn failure(format: Format, diagnostic: Diagnostic, code: i32) -> Output {
    let stdout = match format {
        Format::Json => json(&diagnostic),
        other => render::diagnostic_table(&diagnostic).render(other),
    };
    let stderr = match &diagnostic.input {
        Some(input) => format!("error: {} ({}): {}\n", diagnostic.error, input, diagnostic.message),
        None => format!("error: {}: {}\n", diagnostic.error, diagnostic.message),
    };
    Output { stdout, stderr, code }
}

fn core_failure(format: Format, input: Option<&str>, err: &explab_core::Error) -> Output {
    failure(format, Diagnostic::from_error(input, err), Diagnostic::exit_code(err))
}

fn classify_one(text: &str, vars: Option<&[String]>, config: &Config) -> explab_core::Result<ClassificationReport> {
    let f = parse_input(text, vars)?;
    let mut report = full_report(&f, config)?;
    report.input = text.to_string();
    Ok(report)
}

pub fn run(cli: Cli) -> Output {
    let g = &cli.global;
    let config = match settings::from_env(g.order.as_deref(), g.budget) {
        Ok(c) => c,
        Err(message) => {
            return failure(
                g.format,
                Diagnostic { input: None, error: "ConfigError".into(), message },
                exit::INADMISSIBLE,
            )
        }
    };
    match &cli.command {
        Command::Classify { polynomial, vars } => match classify_one(polynomial, vars.as_deref(), &config) {
            Ok(report) => {
                let stdout = match g.format {
                    Format::Json => json(&report.to_json(g.signed_classes)),
                    other => render::report_table(&report).render(other),
                };
                let mut out = Output::ok(stdout, if report.routes.all_agree() { exit::OK } else { exit::CHECK_FAILED });
                if out.code != exit::OK {
                    out.stderr = "error: classification routes disagree\n".into();
                }
                out
            }
            Err(err) => core_failure(g.format, Some(polynomial), &err),
        },
        Command::Spectrum { polynomials, vars } => {
            let mut reports = Vec::new();
            for text in polynomials {
                match classify_one(text, vars.as_deref(), &config) {
                    Ok(r) => reports.push(r),
                    Err(err) => return core_failure(g.format, Some(text), &err),
                }
            }
            if reports.iter().any(|r| r.spectrum.n() != reports[0].spectrum.n()) {
                let diagnostic = Diagnostic {
                    input: None,
                    error: "VariableMismatch".into(),
                    message: "all germs in one class must have the same number of variables".into(),
                };
                return failure(g.format, diagnostic, exit::INADMISSIBLE);
            }
            match g.format {
                Format::Json => match SpectraJson::new(&reports, g.signed_classes) {
                    Ok(payload) => Output::ok(json(&payload), exit::OK),
                    Err(err) => core_failure(g.format, None, &err),
                },
                other => Output::ok(render::spectra_table(&reports).render(other), exit::OK),
            }
        }
        Command::Join { first, second, vars1, vars2 } => {
            let f1 = match parse_input(first, vars1.as_deref()) {
                Ok(f) => f,
                Err(err) => return core_failure(g.format, Some(first), &err),
            };
            let f2 = match parse_input(second, vars2.as_deref()) {
                Ok(f) => f,
                Err(err) => return core_failure(g.format, Some(second), &err),
            };
            match ts_verify(&f1, &f2, &config) {
                Ok(mut v) => {
                    v.first.input = first.clone();
                    v.second.input = second.clone();
                    v.joined.input = v.joined.polynomial.to_string();
                    let stdout = match g.format {
                        Format::Json => json(&JoinJson::new(&v, g.signed_classes)),
                        other => render::join_table(&v).render(other),
                    };
                    let mut out = Output::ok(stdout, if v.verified() { exit::OK } else { exit::CHECK_FAILED });
                    if out.code != exit::OK {
                        out.stderr = "error: join verification failed\n".into();
                    }
                    out
                }
                Err(err) => core_failure(g.format, Some(&format!("{first} ⊕ {second}")), &err),
            }
        }
        Command::Batch { corpus: path, jobs, out_dir } => {
            let entries = match corpus::load_corpus(path) {
                Ok(e) => e,
                Err(err) => {
                    let diagnostic = Diagnostic { input: None, error: "CorpusError".into(), message: err.to_string() };
                    return failure(g.format, diagnostic, exit::INADMISSIBLE);
                }
            };
            let mut summary = match batch::run_batch(&entries, &config, *jobs, g.signed_classes) {
                Ok(s) => s,
                Err(message) => {
                    return failure(
                        g.format,
                        Diagnostic { input: None, error: "Internal".into(), message },
                        exit::INTERNAL,
                    )
                }
            };
            let table = render::batch_table(&summary);
            if let Some(dir) = out_dir {
                if let Err(err) = batch::write_reports(&mut summary, dir) {
                    let diagnostic = Diagnostic { input: None, error: "Io".into(), message: err.to_string() };
                    return failure(g.format, diagnostic, exit::INTERNAL);
                }
            }
            let stdout = match g.format {
                Format::Json => json(&summary),
                other => table.render(other),
            };
            let code = if !summary.passed() {
                exit::CHECK_FAILED
            } else if summary.internal_errors > 0 {
                exit::INTERNAL
            } else {
                exit::OK
            };
            let mut stderr = String::new();
            for p in &summary.pin_failures {
                stderr.push_str(&format!("pin failure: {}: {}\n", p.id, p.mismatches.join("; ")));
            }
            for r in summary.results.iter().filter(|r| r.routes_agree == Some(false)) {
                stderr.push_str(&format!("route disagreement: {}\n", r.id));
            }
            Output { stdout, stderr, code }
        }
        Command::Schema { name } => match name {
            Some(name) => Output::ok(schema::get(name).expect("validated by clap").to_string(), exit::OK),
            None => Output::ok(schema::names().map(|n| format!("{n}\n")).collect(), exit::OK),
        },
    }
}
