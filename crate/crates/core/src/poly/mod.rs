//! Exact multivariate polynomials over ℚ.
//!
//! A [`Polynomial`] carries its ordered list of variable names together with a sparse map
//! from exponent vectors to nonzero rational coefficients. Arithmetic between polynomials
//! requires identical variable lists; [`join`] builds sums over disjoint variable sets.

mod gcd;
mod json;
mod monomial;
mod parse;
pub mod rational;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::MonomialOrder;

pub use gcd::{gcd, is_squarefree};
pub use json::PolynomialJson;
pub use monomial::Monomial;
pub use parse::{infer_variables, parse, ParseError};
pub use rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    variables: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero(variables: Vec<String>) -> Self {
        Polynomial { variables, terms: BTreeMap::new() }
    }

    pub fn constant(value: Rational, variables: Vec<String>) -> Self {
        let n = variables.len();
        Self::from_terms(variables, [(Monomial::one(n), value)])
    }

    pub fn one(variables: Vec<String>) -> Self {
        Self::constant(Rational::one(), variables)
    }

    /// The polynomial `x_i`. Panics when `i` is out of range.
    pub fn variable(variables: Vec<String>, i: usize) -> Self {
        let n = variables.len();
        Self::from_terms(variables, [(Monomial::variable(n, i), Rational::one())])
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, summing repeated monomials and
    /// dropping zeros. Panics if a monomial has the wrong number of exponents.
    pub fn from_terms<I>(variables: Vec<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut map: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (mono, coeff) in terms {
            assert_eq!(mono.nvars(), variables.len(), "monomial length does not match variable count");
            *map.entry(mono).or_insert_with(Rational::zero) += coeff;
        }
        map.retain(|_, c| !c.is_zero());
        Polynomial { variables, terms: map }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn nvars(&self) -> usize {
        self.variables.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, mono: &Monomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&Monomial::one(self.nvars()))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.exponents()[i]).max().unwrap_or(0)
    }

    /// Terms sorted from largest to smallest under `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| order.compare(b.0, a.0));
        terms
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.variables.clone());
        }
        Polynomial {
            variables: self.variables.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Polynomial {
        Polynomial {
            variables: self.variables.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.mul(mono), v.clone())).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(self.variables.clone());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Formal partial derivative with respect to the `i`-th variable.
    pub fn partial(&self, i: usize) -> Result<Polynomial> {
        if i >= self.nvars() {
            return Err(Error::VariableIndex { index: i, nvars: self.nvars() });
        }
        let terms = self.terms.iter().filter(|(m, _)| m.exponents()[i] > 0).map(|(m, c)| {
            let mut exps = m.exponents().to_vec();
            let e = exps[i];
            exps[i] -= 1;
            (Monomial::new(exps), c * Rational::from_integer(e.into()))
        });
        Ok(Polynomial::from_terms(self.variables.clone(), terms))
    }

    /// All first partial derivatives, i.e. the generators of the Jacobian ideal.
    pub fn gradient(&self) -> Vec<Polynomial> {
        (0..self.nvars()).map(|i| self.partial(i).expect("index in range")).collect()
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars());
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut value = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                if e > 0 {
                    value *= num_traits::pow(x.clone(), e as usize);
                }
            }
            total += value;
        }
        total
    }

    /// Re-expresses this polynomial in a larger variable list; `positions[i]` is the new index of
    /// variable `i`.
    pub fn embed(&self, variables: Vec<String>, positions: &[usize]) -> Polynomial {
        let n = variables.len();
        let terms = self.terms.iter().map(|(m, c)| {
            let mut exps = vec![0; n];
            for (i, &e) in m.exponents().iter().enumerate() {
                exps[positions[i]] += e;
            }
            (Monomial::new(exps), c.clone())
        });
        Polynomial::from_terms(variables, terms)
    }

    pub fn with_variables(&self, variables: Vec<String>) -> Polynomial {
        assert_eq!(variables.len(), self.nvars());
        Polynomial { variables, terms: self.terms.clone() }
    }

    /// Applies `x_i ↦ x_{perm[i]}` to the exponents, keeping the variable names in place.
    pub fn permute_variables(&self, perm: &[usize]) -> Polynomial {
        self.embed(self.variables.clone(), perm)
    }

    /// Substitutes `x_i ↦ c_i · x_i`.
    pub fn scale_variables(&self, factors: &[Rational]) -> Polynomial {
        let terms = self.terms.iter().map(|(m, c)| {
            let mut value = c.clone();
            for (f, &e) in factors.iter().zip(m.exponents()) {
                value *= num_traits::pow(f.clone(), e as usize);
            }
            (m.clone(), value)
        });
        Polynomial::from_terms(self.variables.clone(), terms)
    }

    /// Divides by the coefficient of the largest term under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading_term(order) {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Deterministic text form, terms sorted by `order`.
    pub fn to_string_with(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (mono, coeff)) in self.sorted_terms(order).into_iter().enumerate() {
            let negative = coeff < &Rational::zero();
            let abs = if negative { -coeff.clone() } else { coeff.clone() };
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            if mono.is_one() {
                out.push_str(&rational::format_rational(&abs));
            } else {
                if !abs.is_one() {
                    out.push_str(&rational::format_rational(&abs));
                    out.push('*');
                }
                out.push_str(&mono.display(&self.variables).to_string());
            }
        }
        out
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert_eq!(self.variables, other.variables, "polynomials over different variable lists");
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_string_with(&MonomialOrder::grevlex(self.nvars())))
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_compatible(rhs);
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let entry = terms.entry(m.clone()).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Polynomial { variables: self.variables.clone(), terms }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        Polynomial {
            variables: self.variables.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_compatible(rhs);
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                *terms.entry(m1.mul(m2)).or_insert_with(Rational::zero) += c1 * c2;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Polynomial { variables: self.variables.clone(), terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Sum `f + g` over the disjoint union of their variable sets.
///
/// Variable names present in both inputs are renamed `name1` in `f` and `name2` in `g`
/// (with further numeric suffixes if those are taken), so `join(x^2, x^2)` is `x1^2 + x2^2`.
pub fn join(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let clashes: Vec<&String> = f.variables.iter().filter(|v| g.variables.contains(v)).collect();
    let taken: Vec<String> = f.variables.iter().chain(&g.variables).cloned().collect();
    let mut used: Vec<String> = taken.clone();
    let mut fresh = |base: &str, start: usize| -> String {
        let mut k = start;
        loop {
            let candidate = format!("{base}{k}");
            if !used.contains(&candidate) {
                used.push(candidate.clone());
                return candidate;
            }
            k += 2;
        }
    };
    let mut f_names = f.variables.clone();
    let mut g_names = g.variables.clone();
    for name in clashes {
        let fi = f.variables.iter().position(|v| v == name).unwrap();
        let gi = g.variables.iter().position(|v| v == name).unwrap();
        f_names[fi] = fresh(name, 1);
        g_names[gi] = fresh(name, 2);
    }
    let n1 = f.nvars();
    let variables: Vec<String> = f_names.into_iter().chain(g_names).collect();
    let f_pos: Vec<usize> = (0..n1).collect();
    let g_pos: Vec<usize> = (n1..variables.len()).collect();
    let lifted_f = f.embed(variables.clone(), &f_pos);
    let lifted_g = g.embed(variables, &g_pos);
    &lifted_f + &lifted_g
}
