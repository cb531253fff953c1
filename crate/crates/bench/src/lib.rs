//! Shared fixtures for the criterion benches.

use explab_core::{parse, poly::infer_variables, Polynomial};

/// Germs of increasing Milnor number.
pub const SAMPLES: &[(&str, &str)] = &[
    ("A6", "x^2+y^7"),
    ("E8", "x^3+y^5"),
    ("D5+A1", "x^2*y+y^4+u^2+v^2"),
    ("fermat-n3-d5", "x^5+y^5+z^5"),
    ("E7+A2", "x^3+x*y^3+u^2+v^3"),
    ("fermat-n4-d4", "x^4+y^4+z^4+w^4"),
];

pub fn polynomial(text: &str) -> Polynomial {
    parse(text, &infer_variables(text).expect("fixture identifiers")).expect("fixture parses")
}

pub fn samples() -> Vec<(&'static str, Polynomial)> {
    SAMPLES.iter().map(|(name, text)| (*name, polynomial(text))).collect()
}
