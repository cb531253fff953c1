//! Higher Du Bois and higher rational singularities of isolated quasi-homogeneous hypersurfaces.
//!
//! The pipeline parses a polynomial `f` over ℚ, solves for its quasi-homogeneous weights,
//! computes the Milnor algebra through a Gröbner basis of the Jacobian ideal, and reads off the
//! Steenbrink spectrum as weighted degrees of the standard monomials. The minimal exponent is
//! the smallest spectral number. Classification as k-Du Bois / k-rational is then decided three
//! ways: by thresholding the minimal exponent, by jumping numbers of higher multiplier ideals,
//! and by support of the spectral Hirzebruch–Milnor class. All three must agree.
//!
//! ```
//! use explab_core::{classify::full_report, parse, Config};
//!
//! let vars = vec!["x".to_string(), "y".to_string(), "z".to_string()];
//! let f = parse("x^2 + y^2 + z^2", &vars).unwrap();
//! let report = full_report(&f, &Config::default()).unwrap();
//! assert_eq!(report.max_du_bois.finite(), Some(0));
//! assert_eq!(report.max_rational.finite(), Some(0));
//! assert!(report.routes.all_agree());
//! ```

pub mod classify;
pub mod error;
pub mod groebner;
pub mod poly;
pub mod qh;
pub mod report;
pub mod spectral_class;
pub mod thom_sebastiani;

pub use classify::{ClassificationReport, Level, Verdict};
pub use error::{Error, Result};
pub use groebner::{groebner, GroebnerBasis, MonomialOrder, OrderKind};
pub use poly::{join, parse, Monomial, Polynomial, Rational};
pub use qh::{MinimalExponent, Spectrum, WeightVector};
pub use spectral_class::{HmAggregate, SpectralClass};

/// Pipeline settings shared by every entry point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    pub order: OrderKind,
    pub budget: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { order: OrderKind::Grevlex, budget: groebner::DEFAULT_BUDGET }
    }
}
