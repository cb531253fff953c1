//! k-Du Bois / k-rational classification through three independent routes.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::Result;
use crate::poly::rational::{ceil_i64, floor_i64};
use crate::poly::{Polynomial, Rational};
use crate::qh::{self, Analysis, MinimalExponent, Spectrum, WeightVector};
use crate::spectral_class::{self, HmAggregate, SpectralClass};
use crate::Config;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    #[serde(rename = "duBois")]
    pub du_bois: bool,
    pub rational: bool,
}

/// Largest k for which a property holds; `Finite(-1)` when it fails already at k = 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Level {
    Finite(i64),
    Unbounded,
}

impl Level {
    pub fn finite(&self) -> Option<i64> {
        match self {
            Level::Finite(k) => Some(*k),
            Level::Unbounded => None,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(k) => write!(f, "{k}"),
            Level::Unbounded => f.write_str("inf"),
        }
    }
}

impl Serialize for Level {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Level::Finite(k) => s.serialize_i64(*k),
            Level::Unbounded => s.serialize_str("inf"),
        }
    }
}

fn int(k: u32) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

/// Du Bois iff `α̃ ≥ k + 1`, rational iff `α̃ > k + 1`.
pub fn classify_by_exponent(alpha: &MinimalExponent, k: u32) -> Verdict {
    match alpha {
        MinimalExponent::Infinity => Verdict { du_bois: true, rational: true },
        MinimalExponent::Finite(a) => {
            let bound = int(k + 1);
            Verdict { du_bois: *a >= bound, rational: *a > bound }
        }
    }
}

/// Jumping numbers in `[0, 1)` of the ℓ-th higher multiplier ideal: `γ − ℓ` for each spectral
/// number γ with `⌊γ⌋ = ℓ`, ascending.
pub fn jumping_numbers(sp: &Spectrum, level: u32) -> Vec<Rational> {
    let l = int(level);
    sp.support().filter(|g| floor_i64(g) == level as i64).map(|g| g - &l).collect()
}

/// Du Bois iff no jumping numbers for every `ℓ ≤ k`; rational also needs `0` not to jump at `ℓ = k + 1`.
pub fn classify_by_jumping(sp: &Spectrum, k: u32) -> Verdict {
    let du_bois = (0..=k).all(|l| jumping_numbers(sp, l).is_empty());
    let rational = du_bois && !jumping_numbers(sp, k + 1).iter().any(Rational::is_zero);
    Verdict { du_bois, rational }
}

/// `min{ℓ + α : α a jumping number of the ℓ-th ideal}`.
pub fn minimal_exponent_from_jumps(sp: &Spectrum) -> MinimalExponent {
    let Some(top) = sp.max() else { return MinimalExponent::Infinity };
    let top = floor_i64(top).max(0) as u32;
    (0..=top)
        .flat_map(|l| jumping_numbers(sp, l).into_iter().map(move |a| a + int(l)))
        .min()
        .map_or(MinimalExponent::Infinity, MinimalExponent::Finite)
}

/// Pairwise agreement of the three routes over every tested k.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RouteAgreement {
    #[serde(rename = "exponentVsJumping")]
    pub exponent_vs_jumping: bool,
    #[serde(rename = "exponentVsClass")]
    pub exponent_vs_class: bool,
    #[serde(rename = "jumpingVsClass")]
    pub jumping_vs_class: bool,
}

impl RouteAgreement {
    pub fn all_agree(&self) -> bool {
        self.exponent_vs_jumping && self.exponent_vs_class && self.jumping_vs_class
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub input: String,
    pub polynomial: Polynomial,
    pub weights: Option<WeightVector>,
    pub milnor: usize,
    pub spectrum: Spectrum,
    pub alpha: MinimalExponent,
    pub max_du_bois: Level,
    pub max_rational: Level,
    /// Largest k at which the routes were compared.
    pub checked_up_to: u32,
    /// Per-route verdicts for `k = 0..=checked_up_to`: (exponent, jumping, class).
    pub verdicts: Vec<(Verdict, Verdict, Verdict)>,
    pub jumps: BTreeMap<u32, Vec<Rational>>,
    /// The subset of `jumps` lying strictly above the minimal exponent, where the weighted
    /// monomial model is not certified by the classification theorems.
    pub extrapolated_jumps: BTreeMap<u32, Vec<Rational>>,
    pub routes: RouteAgreement,
    pub alpha_from_jumps: MinimalExponent,
    pub class: SpectralClass,
    pub aggregate: HmAggregate,
    pub corollaries_hold: bool,
}

impl ClassificationReport {
    pub fn du_bois(&self, k: u32) -> bool {
        classify_by_exponent(&self.alpha, k).du_bois
    }

    pub fn rational(&self, k: u32) -> bool {
        classify_by_exponent(&self.alpha, k).rational
    }

    /// All internal consistency checks: route agreement, the jump-based minimal exponent, and
    /// the aggregate vanishing pattern.
    pub fn consistent(&self) -> bool {
        self.routes.all_agree() && self.alpha_from_jumps == self.alpha && self.corollaries_hold
    }
}

fn max_level(k_max: u32, pred: impl Fn(u32) -> bool) -> Level {
    let mut level = -1;
    for k in 0..=k_max {
        if !pred(k) {
            return Level::Finite(level);
        }
        level = k as i64;
    }
    Level::Unbounded
}

/// Classifies `f` after running the admissibility checks of [`qh::analyze`].
pub fn full_report(f: &Polynomial, config: &Config) -> Result<ClassificationReport> {
    Ok(report_from_analysis(&qh::analyze(f, config)?))
}

pub fn report_from_analysis(analysis: &Analysis) -> ClassificationReport {
    let alpha = analysis.alpha.clone();
    let sp = &analysis.spectrum;
    let class = spectral_class::build_class(sp, "0");
    let aggregate = class.aggregate();

    let checked_up_to = match &alpha {
        MinimalExponent::Finite(a) => (ceil_i64(a) + 1) as u32,
        MinimalExponent::Infinity => sp.n() as u32 + 1,
    };

    let verdicts: Vec<(Verdict, Verdict, Verdict)> = (0..=checked_up_to)
        .map(|k| {
            (classify_by_exponent(&alpha, k), classify_by_jumping(sp, k), spectral_class::classify_by_class(&class, k))
        })
        .collect();
    let routes = RouteAgreement {
        exponent_vs_jumping: verdicts.iter().all(|(e, j, _)| e == j),
        exponent_vs_class: verdicts.iter().all(|(e, _, c)| e == c),
        jumping_vs_class: verdicts.iter().all(|(_, j, c)| j == c),
    };

    let (max_du_bois, max_rational) = if alpha.is_infinite() {
        (Level::Unbounded, Level::Unbounded)
    } else {
        (
            max_level(checked_up_to, |k| classify_by_exponent(&alpha, k).du_bois),
            max_level(checked_up_to, |k| classify_by_exponent(&alpha, k).rational),
        )
    };

    let mut jumps = BTreeMap::new();
    let mut extrapolated_jumps = BTreeMap::new();
    if !alpha.is_infinite() {
        for l in 0..=checked_up_to {
            let js = jumping_numbers(sp, l);
            let above: Vec<Rational> =
                js.iter().filter(|a| alpha.finite().is_some_and(|m| *a + int(l) > *m)).cloned().collect();
            if !above.is_empty() {
                extrapolated_jumps.insert(l, above);
            }
            jumps.insert(l, js);
        }
    }

    let mut report = ClassificationReport {
        input: analysis.polynomial.to_string(),
        polynomial: analysis.polynomial.clone(),
        weights: analysis.weights.clone(),
        milnor: analysis.milnor,
        spectrum: sp.clone(),
        alpha_from_jumps: minimal_exponent_from_jumps(sp),
        alpha,
        max_du_bois,
        max_rational,
        checked_up_to,
        verdicts,
        jumps,
        extrapolated_jumps,
        routes,
        class,
        aggregate,
        corollaries_hold: false,
    };
    report.corollaries_hold = spectral_class::corollary_checks(&report.class, &report);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{int as q, ratio};
    use crate::poly::{infer_variables, parse};

    fn report(text: &str) -> ClassificationReport {
        let f = parse(text, &infer_variables(text).unwrap()).unwrap();
        full_report(&f, &Config::default()).unwrap()
    }

    fn cusp() -> Spectrum {
        Spectrum::from_entries(2, [(ratio(5, 6), 1), (ratio(7, 6), 1)])
    }

    #[test]
    fn exponent_route() {
        let v = |a: Rational, k| classify_by_exponent(&MinimalExponent::Finite(a), k);
        assert_eq!(v(ratio(3, 2), 0), Verdict { du_bois: true, rational: true });
        assert_eq!(v(q(1), 0), Verdict { du_bois: true, rational: false });
        assert_eq!(v(ratio(5, 6), 0), Verdict { du_bois: false, rational: false });
        assert_eq!(classify_by_exponent(&MinimalExponent::Infinity, 7), Verdict { du_bois: true, rational: true });
    }

    #[test]
    fn jumping_number_extraction() {
        assert_eq!(jumping_numbers(&cusp(), 0), vec![ratio(5, 6)]);
        assert_eq!(jumping_numbers(&cusp(), 1), vec![ratio(1, 6)]);
        assert!(jumping_numbers(&Spectrum::from_entries(3, [(ratio(3, 2), 1)]), 0).is_empty());
    }

    #[test]
    fn jumping_route() {
        assert_eq!(classify_by_jumping(&cusp(), 0), Verdict { du_bois: false, rational: false });
        let quadric = Spectrum::from_entries(3, [(ratio(3, 2), 1)]);
        assert_eq!(classify_by_jumping(&quadric, 0), Verdict { du_bois: true, rational: true });
        let cubic = Spectrum::from_entries(3, [(q(1), 1), (ratio(4, 3), 3), (ratio(5, 3), 3), (q(2), 1)]);
        assert_eq!(classify_by_jumping(&cubic, 0), Verdict { du_bois: true, rational: false });
    }

    #[test]
    fn exponent_from_jumps() {
        assert_eq!(minimal_exponent_from_jumps(&cusp()), MinimalExponent::Finite(ratio(5, 6)));
        assert_eq!(report("x^3+y^5").alpha_from_jumps, MinimalExponent::Finite(ratio(8, 15)));
        assert_eq!(report("a^2+b^2+c^2+d^2+e^2").alpha_from_jumps, MinimalExponent::Finite(ratio(5, 2)));
    }

    #[test]
    fn report_levels() {
        let r = report("x^2+y^2+z^2");
        assert_eq!((r.max_du_bois, r.max_rational), (Level::Finite(0), Level::Finite(0)));
        let r = report("a^2+b^2+c^2+d^2+e^2");
        assert_eq!((r.max_du_bois, r.max_rational), (Level::Finite(1), Level::Finite(1)));
        let r = report("x^3+y^3+z^3");
        assert_eq!((r.max_du_bois, r.max_rational), (Level::Finite(0), Level::Finite(-1)));
        assert!(r.consistent());
        let r = report("x^2+y^3");
        assert_eq!((r.max_du_bois, r.max_rational), (Level::Finite(-1), Level::Finite(-1)));
        assert_eq!(r.jumps[&1], vec![ratio(1, 6)]);
        assert_eq!(r.extrapolated_jumps.get(&1), Some(&vec![ratio(1, 6)]));
        assert!(!r.extrapolated_jumps.contains_key(&0));
    }

    #[test]
    fn smooth_report_is_all_true() {
        let r = report("x + y^2");
        assert_eq!(r.alpha, MinimalExponent::Infinity);
        assert_eq!((r.max_du_bois, r.max_rational), (Level::Unbounded, Level::Unbounded));
        assert!(r.verdicts.iter().all(|(e, j, c)| e.du_bois && e.rational && e == j && j == c));
        assert!(r.consistent());
    }

    #[test]
    fn node_boundary() {
        let r = report("x^2+y^2");
        assert_eq!((r.max_du_bois, r.max_rational), (Level::Finite(0), Level::Finite(-1)));
        assert_eq!(r.aggregate.unipotent(1), 1);
        assert_eq!(r.aggregate.by_degree(0), 0);
        assert!(r.corollaries_hold);
    }
}
