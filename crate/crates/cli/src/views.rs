//! JSON payloads emitted by the verbs other than `classify`.

use explab_core::classify::ClassificationReport;
use explab_core::qh::SpectrumJson;
use explab_core::spectral_class::{build_class, ClassJson};
use explab_core::thom_sebastiani::{TsBound, TsVerification};
use explab_core::{Level, MinimalExponent, Result};
use serde::Serialize;

use crate::Diagnostic;

#[derive(Clone, Debug, Serialize)]
pub struct LevelPair {
    #[serde(rename = "duBoisLevel")]
    pub du_bois: Level,
    #[serde(rename = "rationalLevel")]
    pub rational: Level,
}

#[derive(Clone, Debug, Serialize)]
pub struct AlphaTriple {
    pub first: MinimalExponent,
    pub second: MinimalExponent,
    pub joined: MinimalExponent,
}

#[derive(Clone, Debug, Serialize)]
pub struct JoinChecks {
    #[serde(rename = "convolutionMatches")]
    pub convolution_matches: bool,
    #[serde(rename = "alphaAdditive")]
    pub alpha_additive: bool,
    #[serde(rename = "milnorMultiplicative")]
    pub milnor_multiplicative: bool,
    #[serde(rename = "levelsMeetBound")]
    pub levels_meet_bound: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct JoinJson {
    pub joined: String,
    pub bound: TsBound,
    pub actual: LevelPair,
    pub alpha: AlphaTriple,
    pub checks: JoinChecks,
    pub verified: bool,
    pub report: explab_core::report::ReportJson,
}

impl JoinJson {
    pub fn new(v: &TsVerification, signed: bool) -> Self {
        JoinJson {
            joined: v.joined.polynomial.to_string(),
            bound: v.bound,
            actual: LevelPair { du_bois: v.joined.max_du_bois, rational: v.joined.max_rational },
            alpha: AlphaTriple {
                first: v.first.alpha.clone(),
                second: v.second.alpha.clone(),
                joined: v.joined.alpha.clone(),
            },
            checks: JoinChecks {
                convolution_matches: v.convolution_matches,
                alpha_additive: v.alpha_additive,
                milnor_multiplicative: v.milnor_multiplicative,
                levels_meet_bound: v.levels_meet_bound,
            },
            verified: v.verified(),
            report: v.joined.to_json(signed),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SpectrumPoint {
    pub label: String,
    pub input: String,
    pub variables: Vec<String>,
    pub milnor: usize,
    pub alpha_tilde: MinimalExponent,
    pub spectrum: SpectrumJson,
}

/// Spectra of several germs and the class of their disjoint union.
#[derive(Clone, Debug, Serialize)]
pub struct SpectraJson {
    pub points: Vec<SpectrumPoint>,
    pub class: ClassJson,
}

impl SpectraJson {
    /// Points are labelled `p0, p1, ...`; all reports must share the ambient dimension.
    pub fn new(reports: &[ClassificationReport], signed: bool) -> Result<Self> {
        let mut class = None;
        let mut points = Vec::new();
        for (i, r) in reports.iter().enumerate() {
            let label = format!("p{i}");
            let c = build_class(&r.spectrum, &label);
            class = Some(match class {
                None => c,
                Some(acc) => explab_core::SpectralClass::merge(&acc, &c)?,
            });
            points.push(SpectrumPoint {
                label,
                input: r.input.clone(),
                variables: r.polynomial.variables().to_vec(),
                milnor: r.milnor,
                alpha_tilde: r.alpha.clone(),
                spectrum: r.spectrum.to_json(),
            });
        }
        let class = class.ok_or(explab_core::Error::NoGenerators)?;
        Ok(SpectraJson { points, class: class.to_json(signed) })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PinFailure {
    pub id: String,
    pub mismatches: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum EntryStatus {
    Classified,
    Inadmissible,
    Internal,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryResult {
    pub id: String,
    pub status: EntryStatus,
    #[serde(rename = "routesAgree", skip_serializing_if = "Option::is_none")]
    pub routes_agree: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<explab_core::report::ReportJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub diagnostic: Option<Diagnostic>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BatchSummary {
    pub entries: usize,
    pub classified: usize,
    pub inadmissible: usize,
    #[serde(rename = "internalErrors")]
    pub internal_errors: usize,
    #[serde(rename = "routeFailures")]
    pub route_failures: usize,
    #[serde(rename = "pinFailures")]
    pub pin_failures: Vec<PinFailure>,
    pub results: Vec<EntryResult>,
}

impl BatchSummary {
    pub fn passed(&self) -> bool {
        self.pin_failures.is_empty() && self.route_failures == 0
    }
}
