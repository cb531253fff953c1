//! JSON form of classification reports.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::classify::{ClassificationReport, Level, RouteAgreement};
use crate::poly::rational::format_rational;
use crate::qh::{MinimalExponent, SpectrumJson};
use crate::spectral_class::ClassJson;

/// Serialized report. Keys follow the published report schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub input: String,
    pub variables: Vec<String>,
    /// Null for smooth germs.
    pub weights: Option<Vec<String>>,
    pub milnor: usize,
    pub alpha_tilde: MinimalExponent,
    #[serde(rename = "alphaFromJumps")]
    pub alpha_from_jumps: MinimalExponent,
    #[serde(rename = "maxDuBois")]
    pub max_du_bois: Level,
    #[serde(rename = "maxRational")]
    pub max_rational: Level,
    pub jumps: BTreeMap<String, Vec<String>>,
    #[serde(rename = "jumpsExtrapolated")]
    pub jumps_extrapolated: BTreeMap<String, Vec<String>>,
    #[serde(rename = "checkedUpTo")]
    pub checked_up_to: u32,
    #[serde(rename = "routesAgree")]
    pub routes_agree: bool,
    pub routes: RouteAgreement,
    #[serde(rename = "corollariesHold")]
    pub corollaries_hold: bool,
    pub spectrum: SpectrumJson,
    pub class: ClassJson,
}

fn jump_table(table: &BTreeMap<u32, Vec<crate::Rational>>) -> BTreeMap<String, Vec<String>> {
    table.iter().map(|(l, js)| (l.to_string(), js.iter().map(format_rational).collect())).collect()
}

impl ClassificationReport {
    /// `signed` multiplies `byDegree[k]` by `(-1)^k` in the class section.
    pub fn to_json(&self, signed: bool) -> ReportJson {
        ReportJson {
            input: self.input.clone(),
            variables: self.polynomial.variables().to_vec(),
            weights: self.weights.as_ref().map(|w| w.weights().iter().map(format_rational).collect()),
            milnor: self.milnor,
            alpha_tilde: self.alpha.clone(),
            alpha_from_jumps: self.alpha_from_jumps.clone(),
            max_du_bois: self.max_du_bois,
            max_rational: self.max_rational,
            jumps: jump_table(&self.jumps),
            jumps_extrapolated: jump_table(&self.extrapolated_jumps),
            checked_up_to: self.checked_up_to,
            routes_agree: self.routes.all_agree(),
            routes: self.routes,
            corollaries_hold: self.corollaries_hold,
            spectrum: self.spectrum.to_json(),
            class: self.class.to_json(signed),
        }
    }
}
