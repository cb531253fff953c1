#![allow(dead_code)]

use explab_core::poly::rational::ratio;
use explab_core::{Monomial, Polynomial, Rational};
use proptest::prelude::*;

pub fn vars(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

pub fn poly(text: &str) -> Polynomial {
    let names = explab_core::poly::infer_variables(text).unwrap();
    explab_core::parse(text, &names).unwrap()
}

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

/// Polynomials in `nvars` variables with up to `max_terms` terms of exponent at most `max_exp`.
pub fn small_poly(nvars: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = Polynomial> {
    let names: Vec<String> = ["x", "y", "z", "w"][..nvars].iter().map(|s| s.to_string()).collect();
    prop::collection::vec((prop::collection::vec(0..=max_exp, nvars), small_rational()), 0..=max_terms).prop_map(
        move |terms| Polynomial::from_terms(names.clone(), terms.into_iter().map(|(e, c)| (Monomial::new(e), c))),
    )
}

pub fn point(nvars: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec(small_rational(), nvars)
}
