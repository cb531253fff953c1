//! Localized spectral Hirzebruch–Milnor classes of hypersurfaces with finitely many singular points.
//!
//! On a finite singular locus every homology class is a combination of point classes, so the
//! class is stored as one coefficient table per point: the coefficient of `t^γ` at a point is
//! the multiplicity of γ in that point's spectrum. Coefficients are unsigned ranks; the sign
//! `(-1)^k` that relates `M_{(-y)*}` to `M_{y*}` is only applied on request for display.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::classify::{ClassificationReport, Level, Verdict};
use crate::error::{Error, Result};
use crate::poly::rational::{self, floor_i64};
use crate::poly::Rational;
use crate::qh::Spectrum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClass {
    pub label: String,
    pub coefficients: BTreeMap<Rational, u64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralClass {
    n: usize,
    points: Vec<PointClass>,
}

/// Single-point class whose coefficient at `t^γ` is `m(γ)`.
pub fn build_class(sp: &Spectrum, point: &str) -> SpectralClass {
    SpectralClass {
        n: sp.n(),
        points: vec![PointClass {
            label: point.to_string(),
            coefficients: sp.entries().map(|(g, m)| (g.clone(), m)).collect(),
        }],
    }
}

impl SpectralClass {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn points(&self) -> &[PointClass] {
        &self.points
    }

    /// Class of a disjoint union of singular points in the same ambient dimension.
    pub fn merge(&self, other: &SpectralClass) -> Result<SpectralClass> {
        if self.n != other.n {
            return Err(Error::VariableMismatch);
        }
        let mut points = self.points.clone();
        points.extend(other.points.iter().cloned());
        Ok(SpectralClass { n: self.n, points })
    }

    /// Total coefficient at `t^γ`, summed over points; zero off the support.
    pub fn coefficient(&self, gamma: &Rational) -> u64 {
        self.points.iter().map(|p| p.coefficients.get(gamma).copied().unwrap_or(0)).sum()
    }

    /// Summed coefficients in ascending γ.
    pub fn summed(&self) -> BTreeMap<Rational, u64> {
        let mut out = BTreeMap::new();
        for p in &self.points {
            for (g, &m) in &p.coefficients {
                if m > 0 {
                    *out.entry(g.clone()).or_insert(0) += m;
                }
            }
        }
        out
    }

    pub fn support(&self) -> BTreeSet<Rational> {
        self.summed().into_keys().collect()
    }

    pub fn total_mass(&self) -> u64 {
        self.points.iter().flat_map(|p| p.coefficients.values()).sum()
    }

    /// Order of the semisimple monodromy: lcm of the denominators of the exponents.
    pub fn monodromy_order(&self) -> BigInt {
        self.support().iter().fold(BigInt::one(), |acc, g| acc.lcm(g.denom()))
    }

    /// Buckets coefficients by integer part: `byDegree[k] = Σ_{α∈[0,1)} coeff(k+α)` and
    /// `unipotent[k] = coeff(k)`.
    pub fn aggregate(&self) -> HmAggregate {
        let mut by_degree = BTreeMap::new();
        let mut unipotent = BTreeMap::new();
        for (g, m) in self.summed() {
            *by_degree.entry(floor_i64(&g)).or_insert(0) += m;
            if g.is_integer() {
                *unipotent.entry(floor_i64(&g)).or_insert(0) += m;
            }
        }
        HmAggregate { by_degree, unipotent }
    }

    pub fn to_json(&self, signed: bool) -> ClassJson {
        let aggregate = self.aggregate();
        ClassJson {
            points: self.points.iter().map(|p| p.label.clone()).collect(),
            coefficients: self
                .summed()
                .into_iter()
                .map(|(gamma, coeff)| ClassCoefficient { gamma: rational::format_rational(&gamma), coeff })
                .collect(),
            by_degree: aggregate
                .by_degree
                .keys()
                .map(|&k| {
                    (k.to_string(), if signed { aggregate.signed_by_degree(k) } else { aggregate.by_degree(k) as i64 })
                })
                .collect(),
            unipotent: aggregate.unipotent.iter().map(|(k, &v)| (k.to_string(), v)).collect(),
            ord_ts: self.monodromy_order().to_string(),
            signed,
        }
    }
}

/// Hirzebruch–Milnor aggregates of a spectral class. Absent keys are zero.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HmAggregate {
    by_degree: BTreeMap<i64, u64>,
    unipotent: BTreeMap<i64, u64>,
}

impl HmAggregate {
    pub fn by_degree(&self, k: i64) -> u64 {
        self.by_degree.get(&k).copied().unwrap_or(0)
    }

    pub fn unipotent(&self, k: i64) -> u64 {
        self.unipotent.get(&k).copied().unwrap_or(0)
    }

    /// `(-1)^k · byDegree[k]`.
    pub fn signed_by_degree(&self, k: i64) -> i64 {
        let v = self.by_degree(k) as i64;
        if k.rem_euclid(2) == 0 {
            v
        } else {
            -v
        }
    }

    pub fn by_degree_map(&self) -> &BTreeMap<i64, u64> {
        &self.by_degree
    }

    pub fn unipotent_map(&self) -> &BTreeMap<i64, u64> {
        &self.unipotent
    }
}

/// Class-support route: k-Du Bois iff no exponent in `(0, k+1)`, k-rational iff none in `(0, k+1]`.
pub fn classify_by_class(c: &SpectralClass, k: u32) -> Verdict {
    let bound = Rational::from_integer(BigInt::from(k) + 1);
    let support = c.support();
    let positive = support.iter().filter(|g| **g > Rational::zero());
    let mut du_bois = true;
    let mut rational = true;
    for g in positive {
        if g < &bound {
            du_bois = false;
        }
        if g <= &bound {
            rational = false;
        }
    }
    Verdict { du_bois, rational }
}

/// Whether the aggregate vanishing pattern certifies exactly the report's levels.
///
/// Du Bois at level k: `byDegree[p] = 0` for `p ≤ k`. Rational at level k: additionally
/// `unipotent[k+1] = 0`. Finite levels must hold at the level and fail one step above;
/// unbounded levels must hold for every k up to `n + 1`.
pub fn corollary_checks(c: &SpectralClass, report: &ClassificationReport) -> bool {
    let agg = c.aggregate();
    let du_bois = |k: i64| (0..=k).all(|p| agg.by_degree(p) == 0);
    let rational = |k: i64| du_bois(k) && agg.unipotent(k + 1) == 0;
    let sharp = |level: &Level, pred: &dyn Fn(i64) -> bool| match *level {
        Level::Finite(k) => (k < 0 || pred(k)) && !pred(k + 1),
        Level::Unbounded => (0..=c.n as i64 + 1).all(pred),
    };
    sharp(&report.max_du_bois, &du_bois) && sharp(&report.max_rational, &rational)
}

/// `{"points": [...], "coefficients": [{"gamma": "p/q", "coeff": m}], "byDegree": {...}, "unipotent": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassJson {
    pub points: Vec<String>,
    pub coefficients: Vec<ClassCoefficient>,
    #[serde(rename = "byDegree")]
    pub by_degree: BTreeMap<String, i64>,
    pub unipotent: BTreeMap<String, u64>,
    #[serde(rename = "ordTs")]
    pub ord_ts: String,
    pub signed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCoefficient {
    pub gamma: String,
    pub coeff: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::{int, ratio};

    fn cusp() -> Spectrum {
        Spectrum::from_entries(2, [(ratio(5, 6), 1), (ratio(7, 6), 1)])
    }

    fn fermat_cubic() -> Spectrum {
        Spectrum::from_entries(3, [(int(1), 1), (ratio(4, 3), 3), (ratio(5, 3), 3), (int(2), 1)])
    }

    #[test]
    fn coefficients() {
        let c = build_class(&cusp(), "0");
        assert_eq!(c.coefficient(&ratio(5, 6)), 1);
        assert_eq!(c.coefficient(&ratio(1, 2)), 0);
        assert_eq!(build_class(&fermat_cubic(), "0").coefficient(&ratio(4, 3)), 3);
        assert_eq!(build_class(&fermat_cubic(), "0").monodromy_order(), BigInt::from(3));
        assert_eq!(c.monodromy_order(), BigInt::from(6));
    }

    #[test]
    fn aggregates() {
        let agg = build_class(&cusp(), "0").aggregate();
        assert_eq!((agg.by_degree(0), agg.by_degree(1)), (1, 1));
        assert!(agg.unipotent_map().is_empty());

        let agg = build_class(&Spectrum::from_entries(3, [(ratio(3, 2), 1)]), "0").aggregate();
        assert_eq!(agg.by_degree_map(), &BTreeMap::from([(1, 1)]));

        // brute-force bucket of {1, 4/3 x3, 5/3 x3, 2} by floor
        let agg = build_class(&fermat_cubic(), "0").aggregate();
        assert_eq!(agg.by_degree_map(), &BTreeMap::from([(1, 7), (2, 1)]));
        assert_eq!(agg.unipotent_map(), &BTreeMap::from([(1, 1), (2, 1)]));
        assert_eq!(agg.signed_by_degree(1), -7);
    }

    #[test]
    fn class_route() {
        let v = |sp: &Spectrum, k| classify_by_class(&build_class(sp, "0"), k);
        assert_eq!(v(&cusp(), 0), Verdict { du_bois: false, rational: false });
        assert_eq!(v(&Spectrum::from_entries(3, [(ratio(3, 2), 1)]), 0), Verdict { du_bois: true, rational: true });
        assert_eq!(v(&fermat_cubic(), 0), Verdict { du_bois: true, rational: false });
    }

    #[test]
    fn multi_point_merge() {
        let a = build_class(&Spectrum::from_entries(2, [(int(1), 1)]), "p");
        let b = build_class(&cusp(), "q");
        let c = a.merge(&b).unwrap();
        assert_eq!(c.points().len(), 2);
        assert_eq!(c.total_mass(), 3);
        assert_eq!(c.aggregate().unipotent(1), 1);
        assert!(a.merge(&build_class(&fermat_cubic(), "r")).is_err());
    }
}
