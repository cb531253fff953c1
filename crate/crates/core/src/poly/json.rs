use serde::{Deserialize, Serialize};

use super::{rational, Monomial, Polynomial, Rational};
use crate::groebner::MonomialOrder;

/// Canonical JSON form: `{"variables": [...], "terms": [{"exponents": [...], "coefficient": "p/q"}]}`,
/// terms in descending grevlex order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolynomialJson {
    pub variables: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exponents: Vec<u32>,
    #[serde(with = "rational::serde_text")]
    pub coefficient: Rational,
}

impl From<&Polynomial> for PolynomialJson {
    fn from(p: &Polynomial) -> Self {
        let order = MonomialOrder::grevlex(p.nvars());
        PolynomialJson {
            variables: p.variables().to_vec(),
            terms: p
                .sorted_terms(&order)
                .into_iter()
                .map(|(m, c)| TermJson { exponents: m.exponents().to_vec(), coefficient: c.clone() })
                .collect(),
        }
    }
}

impl PolynomialJson {
    /// Rebuilds the polynomial; fails if an exponent vector has the wrong length.
    pub fn to_polynomial(&self) -> Result<Polynomial, String> {
        let n = self.variables.len();
        if let Some(bad) = self.terms.iter().find(|t| t.exponents.len() != n) {
            return Err(format!("exponent vector of length {} for {} variables", bad.exponents.len(), n));
        }
        Ok(Polynomial::from_terms(
            self.variables.clone(),
            self.terms.iter().map(|t| (Monomial::new(t.exponents.clone()), t.coefficient.clone())),
        ))
    }
}
