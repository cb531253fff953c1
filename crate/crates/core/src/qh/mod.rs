//! Quasi-homogeneity, isolatedness, spectrum and minimal exponent.

mod linalg;
mod spectrum;
mod weights;

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::groebner::{self, MonomialOrder};
use crate::poly::{self, rational, Monomial, Polynomial, Rational};
use crate::Config;

pub use linalg::AffineSolution;
pub use spectrum::{spectrum, Spectrum, SpectrumEntry, SpectrumJson};
pub use weights::{solve_weights, weight_system, weights_for_spectrum, WeightVector};

/// Minimal exponent: a positive rational, or infinity for a smooth germ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinimalExponent {
    Finite(Rational),
    Infinity,
}

impl MinimalExponent {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            MinimalExponent::Finite(v) => Some(v),
            MinimalExponent::Infinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, MinimalExponent::Infinity)
    }

    /// Canonical text: `"p/q"` or `"inf"`.
    pub fn to_text(&self) -> String {
        match self {
            MinimalExponent::Finite(v) => rational::format_rational(v),
            MinimalExponent::Infinity => "inf".to_string(),
        }
    }
}

impl PartialOrd for MinimalExponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MinimalExponent {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (MinimalExponent::Finite(a), MinimalExponent::Finite(b)) => a.cmp(b),
            (MinimalExponent::Finite(_), MinimalExponent::Infinity) => Ordering::Less,
            (MinimalExponent::Infinity, MinimalExponent::Finite(_)) => Ordering::Greater,
            (MinimalExponent::Infinity, MinimalExponent::Infinity) => Ordering::Equal,
        }
    }
}

impl Add for &MinimalExponent {
    type Output = MinimalExponent;

    fn add(self, rhs: &MinimalExponent) -> MinimalExponent {
        match (self, rhs) {
            (MinimalExponent::Finite(a), MinimalExponent::Finite(b)) => MinimalExponent::Finite(a + b),
            _ => MinimalExponent::Infinity,
        }
    }
}

impl fmt::Display for MinimalExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl Serialize for MinimalExponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_text())
    }
}

/// Smallest spectral number; `Infinity` for the empty spectrum of a smooth germ.
pub fn minimal_exponent(sp: &Spectrum) -> MinimalExponent {
    match sp.min() {
        Some(v) => MinimalExponent::Finite(v.clone()),
        None => MinimalExponent::Infinity,
    }
}

/// Outcome of the isolatedness check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Isolation {
    /// The germ at the origin is smooth (nonzero linear part) or the Jacobian ideal is the unit ideal.
    Smooth,
    /// Zero-dimensional Jacobian ideal: Milnor number and a monomial basis of the Milnor algebra.
    Isolated { milnor: usize, basis: Vec<Monomial> },
}

/// Decides whether the Jacobian ideal of `f` is zero-dimensional and, if so, returns the
/// standard monomials of its Gröbner basis.
///
/// The count is the dimension of the global Milnor algebra. For quasi-homogeneous `f` every
/// critical point lies on the orbit closure of the origin, so this equals the local Milnor number.
pub fn isolated_check(f: &Polynomial, config: &Config) -> Result<Isolation> {
    if has_linear_term(f) {
        return Ok(Isolation::Smooth);
    }
    let order = MonomialOrder::new(config.order, f.nvars());
    let gradient: Vec<Polynomial> = f.gradient();
    if gradient.iter().all(Polynomial::is_zero) {
        return Err(Error::ConstantInput);
    }
    let basis = groebner::groebner_with_budget(&gradient, &order, config.budget)?;
    if basis.is_unit_ideal() {
        return Ok(Isolation::Smooth);
    }
    match groebner::quotient_basis(&basis) {
        Ok(monomials) => Ok(Isolation::Isolated { milnor: monomials.len(), basis: monomials }),
        Err(Error::NotZeroDimensional { variable }) => {
            Err(Error::NotIsolated { detail: format!("Jacobian ideal has no pure power of `{variable}`") })
        }
        Err(other) => Err(other),
    }
}

fn has_linear_term(f: &Polynomial) -> bool {
    f.terms().any(|(m, _)| m.degree() == 1)
}

/// Everything the classification routes need about one input.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Analysis {
    pub polynomial: Polynomial,
    /// `None` for smooth germs, whose weights may leave `(0, 1)`.
    pub weights: Option<WeightVector>,
    pub milnor: usize,
    pub basis: Vec<Monomial>,
    pub spectrum: Spectrum,
    pub alpha: MinimalExponent,
}

impl Analysis {
    pub fn is_smooth(&self) -> bool {
        self.alpha.is_infinite()
    }
}

/// Runs the admissibility checks and computes weights, Milnor basis, spectrum and minimal exponent.
///
/// Checks run in this order: nonconstant, vanishing at the origin, reduced, smooth germ,
/// consistent weight system, isolated, weights well defined and in `(0, 1)`.
pub fn analyze(f: &Polynomial, config: &Config) -> Result<Analysis> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm { constant: rational::format_rational(&f.constant_term()) });
    }
    if !poly::is_squarefree(f) {
        let mut g = f.clone();
        for d in f.gradient() {
            g = poly::gcd(&g, &d);
        }
        return Err(Error::NotSquarefree { factor: g.to_string() });
    }
    let smooth = || Analysis {
        polynomial: f.clone(),
        weights: None,
        milnor: 0,
        basis: Vec::new(),
        spectrum: Spectrum::empty(f.nvars()),
        alpha: MinimalExponent::Infinity,
    };
    if has_linear_term(f) {
        return Ok(smooth());
    }
    weight_system(f)?;
    let (milnor, basis) = match isolated_check(f, config)? {
        Isolation::Smooth => return Ok(smooth()),
        Isolation::Isolated { milnor, basis } => (milnor, basis),
    };
    let weights = weights_for_spectrum(f, &basis)?;
    debug_assert!(weights.is_homogeneous(f));
    let sp = spectrum(f, &weights, &basis);
    let alpha = minimal_exponent(&sp);
    Ok(Analysis { polynomial: f.clone(), weights: Some(weights), milnor, basis, spectrum: sp, alpha })
}
