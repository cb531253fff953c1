//! Joins `f(x) + g(y)` and the higher Du Bois / higher rational level bound they satisfy.
//!
//! The spectrum of a join is the additive convolution of the factor spectra, minimal exponents
//! add, and Milnor numbers multiply. [`ts_verify`] checks all three against the join computed
//! directly through the full pipeline.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::classify::{report_from_analysis, ClassificationReport, Level};
use crate::error::Result;
use crate::poly::{join, Polynomial};
use crate::qh::{self, Spectrum};
use crate::Config;

/// Spectrum of the join: `{γ₁ + γ₂}` with multiplicities `m₁(γ₁)·m₂(γ₂)`, in dimension `n₁ + n₂`.
pub fn convolve(sp1: &Spectrum, sp2: &Spectrum) -> Spectrum {
    Spectrum::from_entries(
        sp1.n() + sp2.n(),
        sp1.entries().flat_map(|(g1, m1)| sp2.entries().map(move |(g2, m2)| (g1 + g2, m1 * m2))),
    )
}

/// Level guaranteed for a join.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TsLevel {
    /// Some factor fails at level 0, so no bound applies.
    Inadmissible,
    AtLeast(i64),
    /// A factor is smooth, hence so is the join.
    Unbounded,
}

impl fmt::Display for TsLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TsLevel::Inadmissible => f.write_str("-inf"),
            TsLevel::AtLeast(k) => write!(f, "{k}"),
            TsLevel::Unbounded => f.write_str("inf"),
        }
    }
}

impl Serialize for TsLevel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            TsLevel::AtLeast(k) => s.serialize_i64(*k),
            other => s.serialize_str(&other.to_string()),
        }
    }
}

impl TsLevel {
    /// Whether a join certified at `actual` meets this bound.
    pub fn met_by(&self, actual: Level) -> bool {
        match (self, actual) {
            (TsLevel::Inadmissible, _) => true,
            (_, Level::Unbounded) => true,
            (TsLevel::AtLeast(k), Level::Finite(a)) => a >= *k,
            (TsLevel::Unbounded, Level::Finite(_)) => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TsBound {
    #[serde(rename = "duBoisLevel")]
    pub du_bois: TsLevel,
    #[serde(rename = "rationalLevel")]
    pub rational: TsLevel,
}

/// k₁-Du Bois and k₂-Du Bois factors give a (k₁+k₂+1)-Du Bois join; a k₁-rational factor with a
/// k₂-Du Bois one (either way round) gives a (k₁+k₂+1)-rational join.
pub fn ts_level_bound(r1: &ClassificationReport, r2: &ClassificationReport) -> TsBound {
    if r1.max_du_bois == Level::Unbounded || r2.max_du_bois == Level::Unbounded {
        return TsBound { du_bois: TsLevel::Unbounded, rational: TsLevel::Unbounded };
    }
    let level = |l: Level| l.finite().expect("finite level");
    let (d1, d2) = (level(r1.max_du_bois), level(r2.max_du_bois));
    let (q1, q2) = (level(r1.max_rational), level(r2.max_rational));
    let du_bois = if d1 >= 0 && d2 >= 0 { TsLevel::AtLeast(d1 + d2 + 1) } else { TsLevel::Inadmissible };
    let candidates = [(q1, d2), (d1, q2)];
    let rational = candidates
        .iter()
        .filter(|(a, b)| *a >= 0 && *b >= 0)
        .map(|(a, b)| a + b + 1)
        .max()
        .map_or(TsLevel::Inadmissible, TsLevel::AtLeast);
    TsBound { du_bois, rational }
}

#[derive(Clone, Debug)]
pub struct TsVerification {
    pub first: ClassificationReport,
    pub second: ClassificationReport,
    pub joined: ClassificationReport,
    pub convolved: Spectrum,
    pub bound: TsBound,
    pub convolution_matches: bool,
    pub alpha_additive: bool,
    pub milnor_multiplicative: bool,
    pub levels_meet_bound: bool,
}

impl TsVerification {
    pub fn verified(&self) -> bool {
        self.convolution_matches && self.alpha_additive && self.milnor_multiplicative && self.levels_meet_bound
    }
}

/// Classifies both factors and their join, then checks convolution against the direct join
/// spectrum, additivity of the minimal exponent, and the join levels against [`ts_level_bound`].
pub fn ts_verify(f1: &Polynomial, f2: &Polynomial, config: &Config) -> Result<TsVerification> {
    let a1 = qh::analyze(f1, config)?;
    let a2 = qh::analyze(f2, config)?;
    let joined = qh::analyze(&join(f1, f2), config)?;
    let convolved = convolve(&a1.spectrum, &a2.spectrum);
    let (first, second, joined_report) =
        (report_from_analysis(&a1), report_from_analysis(&a2), report_from_analysis(&joined));
    let bound = ts_level_bound(&first, &second);
    Ok(TsVerification {
        convolution_matches: convolved == joined.spectrum,
        alpha_additive: joined.alpha == &a1.alpha + &a2.alpha,
        milnor_multiplicative: joined.milnor == a1.milnor * a2.milnor,
        levels_meet_bound: bound.du_bois.met_by(joined_report.max_du_bois)
            && bound.rational.met_by(joined_report.max_rational),
        convolved,
        bound,
        first,
        second,
        joined: joined_report,
    })
}
