use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::linalg::{self, AffineSolution};
use crate::error::{Error, Result};
use crate::poly::{rational, Monomial, Polynomial, Rational};

/// Quasi-homogeneous weights: `Σ w_i a_i = 1` for every exponent `a` of `f`, each `w_i ∈ (0, 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(Vec<Rational>);

impl WeightVector {
    /// Checks the range invariant.
    pub fn new(weights: Vec<Rational>) -> Result<Self> {
        let one = Rational::one();
        if weights.iter().all(|w| w > &Rational::zero() && w < &one) {
            Ok(WeightVector(weights))
        } else {
            Err(Error::WeightsOutOfRange { weights: format_weights(&weights) })
        }
    }

    pub fn weights(&self) -> &[Rational] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> Rational {
        self.0.iter().sum()
    }

    /// `Σ a_i w_i`.
    pub fn degree(&self, mono: &Monomial) -> Rational {
        self.0.iter().zip(mono.exponents()).map(|(w, &a)| w * Rational::from_integer(a.into())).sum()
    }

    /// `Σ (a_i + 1) w_i`, the spectral number attached to `x^a`.
    pub fn shifted_degree(&self, mono: &Monomial) -> Rational {
        self.degree(mono) + self.sum()
    }

    /// True when `f` is weighted homogeneous of degree 1 for these weights.
    pub fn is_homogeneous(&self, f: &Polynomial) -> bool {
        f.nvars() == self.len() && f.terms().all(|(m, _)| self.degree(m).is_one())
    }

    pub fn concat(&self, other: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().chain(&other.0).cloned().collect())
    }
}

impl Serialize for WeightVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(rational::format_rational))
    }
}

fn format_weights(weights: &[Rational]) -> String {
    let parts: Vec<String> = weights.iter().map(rational::format_rational).collect();
    format!("({})", parts.join(", "))
}

/// The full solution set of `{⟨w, a⟩ = 1 : a exponent of f}`; `NotQuasiHomogeneous` if empty.
pub fn weight_system(f: &Polynomial) -> Result<AffineSolution> {
    let rows: Vec<Vec<Rational>> =
        f.terms().map(|(m, _)| m.exponents().iter().map(|&e| Rational::from_integer(e.into())).collect()).collect();
    let rhs = vec![Rational::one(); rows.len()];
    linalg::solve(&rows, &rhs, f.nvars()).ok_or(Error::NotQuasiHomogeneous)
}

/// The unique weight vector of `f`.
///
/// Fails with `NotQuasiHomogeneous` when the system is inconsistent, `WeightsNotUnique` when it
/// is underdetermined, and `WeightsOutOfRange` when some weight is outside `(0, 1)`.
pub fn solve_weights(f: &Polynomial) -> Result<WeightVector> {
    if f.is_constant() {
        return Err(Error::ConstantInput);
    }
    if !f.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm { constant: rational::format_rational(&f.constant_term()) });
    }
    let system = weight_system(f)?;
    if !system.null_space.is_empty() {
        return Err(Error::WeightsNotUnique);
    }
    WeightVector::new(system.particular)
}

/// Weights to use for the spectrum of an isolated `f` with Milnor basis `basis`.
///
/// A unique solution is taken as is. An underdetermined system is accepted only when every
/// spectral number `Σ (a_i + 1) w_i`, `x^a ∈ basis`, is constant along the whole solution set
/// (as for `xy`, where only `w_1 + w_2` matters); the minimum-norm solution is then returned.
pub fn weights_for_spectrum(f: &Polynomial, basis: &[Monomial]) -> Result<WeightVector> {
    let system = weight_system(f)?;
    let invariant = system.null_space.iter().all(|v| {
        basis.iter().all(|mono| {
            let shift: Rational =
                v.iter().zip(mono.exponents()).map(|(vi, &a)| vi * Rational::from_integer((a + 1).into())).sum();
            shift.is_zero()
        })
    });
    if !invariant {
        return Err(Error::WeightsNotUnique);
    }
    WeightVector::new(system.particular)
}
