use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::WeightVector;
use crate::poly::{rational, Monomial, Polynomial, Rational};

/// Finite multiset of spectral numbers in `(0, n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Spectrum {
    n: usize,
    entries: BTreeMap<Rational, u64>,
}

impl Spectrum {
    pub fn empty(n: usize) -> Self {
        Spectrum { n, entries: BTreeMap::new() }
    }

    /// Builds a spectrum from `(γ, multiplicity)` pairs, merging repeats and dropping zero counts.
    pub fn from_entries<I: IntoIterator<Item = (Rational, u64)>>(n: usize, entries: I) -> Self {
        let mut map = BTreeMap::new();
        for (gamma, mult) in entries {
            if mult > 0 {
                *map.entry(gamma).or_insert(0) += mult;
            }
        }
        Spectrum { n, entries: map }
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.n
    }

    /// `(γ, m(γ))` in ascending order of γ.
    pub fn entries(&self) -> impl Iterator<Item = (&Rational, u64)> {
        self.entries.iter().map(|(g, &m)| (g, m))
    }

    pub fn support(&self) -> impl Iterator<Item = &Rational> {
        self.entries.keys()
    }

    pub fn multiplicity(&self, gamma: &Rational) -> u64 {
        self.entries.get(gamma).copied().unwrap_or(0)
    }

    /// Σ m(γ), the Milnor number.
    pub fn total_mass(&self) -> u64 {
        self.entries.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn min(&self) -> Option<&Rational> {
        self.entries.keys().next()
    }

    pub fn max(&self) -> Option<&Rational> {
        self.entries.keys().next_back()
    }

    /// `m(γ) = m(n − γ)` for every γ.
    pub fn is_symmetric(&self) -> bool {
        let n = Rational::from_integer((self.n as i64).into());
        self.entries.iter().all(|(g, &m)| self.multiplicity(&(&n - g)) == m)
    }

    /// Every spectral number lies in the open interval `(0, n)`.
    pub fn in_range(&self) -> bool {
        let n = Rational::from_integer((self.n as i64).into());
        self.entries.keys().all(|g| g > &Rational::zero() && g < &n)
    }

    pub fn to_json(&self) -> SpectrumJson {
        SpectrumJson {
            n: self.n,
            entries: self.entries.iter().map(|(g, &m)| SpectrumEntry { gamma: g.clone(), mult: m }).collect(),
        }
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, (g, m)) in self.entries.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{}:{}", rational::format_rational(g), m)?;
        }
        f.write_str("}")
    }
}

/// `{"n": n, "entries": [{"gamma": "p/q", "mult": m}]}`, entries ascending in γ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub n: usize,
    pub entries: Vec<SpectrumEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntry {
    #[serde(with = "rational::serde_text")]
    pub gamma: Rational,
    pub mult: u64,
}

impl From<&SpectrumJson> for Spectrum {
    fn from(json: &SpectrumJson) -> Self {
        Spectrum::from_entries(json.n, json.entries.iter().map(|e| (e.gamma.clone(), e.mult)))
    }
}

/// Spectral numbers `Σ (a_i + 1) w_i` over the Milnor-algebra basis monomials `x^a`.
pub fn spectrum(f: &Polynomial, weights: &WeightVector, basis: &[Monomial]) -> Spectrum {
    Spectrum::from_entries(f.nvars(), basis.iter().map(|m| (weights.shifted_degree(m), 1)))
}
