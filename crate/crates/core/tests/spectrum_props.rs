mod common;

use common::{poly, vars};
use explab_core::classify::{classify_by_exponent, classify_by_jumping, full_report, minimal_exponent_from_jumps};
use explab_core::poly::rational::ratio;
use explab_core::qh::{analyze, minimal_exponent};
use explab_core::spectral_class::{build_class, classify_by_class};
use explab_core::thom_sebastiani::convolve;
use explab_core::{parse, Config, Level, Polynomial, Rational, Spectrum};
use proptest::prelude::*;

/// Spectrum of `Σ x_i^{d_i}` straight from the exponent box `0 ≤ a_i ≤ d_i − 2`.
fn brieskorn_pham_oracle(degrees: &[u32]) -> Spectrum {
    let mut entries = vec![Rational::from_integer(0.into())];
    for &d in degrees {
        let mut next = Vec::new();
        for partial in &entries {
            for a in 0..(d - 1) {
                next.push(partial + ratio(a as i64 + 1, d as i64));
            }
        }
        entries = next;
    }
    Spectrum::from_entries(degrees.len(), entries.into_iter().map(|g| (g, 1)))
}

fn brieskorn_pham(degrees: &[u32]) -> Polynomial {
    let names: Vec<String> = (0..degrees.len()).map(|i| format!("x{i}")).collect();
    let text: Vec<String> = degrees.iter().enumerate().map(|(i, d)| format!("x{i}^{d}")).collect();
    parse(&text.join(" + "), &names).unwrap()
}

fn check_invariants(f: &Polynomial) {
    let a = analyze(f, &Config::default()).unwrap();
    let sp = &a.spectrum;
    assert!(sp.is_symmetric(), "{f}: {sp}");
    assert!(sp.in_range());
    assert_eq!(sp.total_mass(), a.milnor as u64);
    assert_eq!(minimal_exponent(sp).finite().cloned(), Some(a.weights.as_ref().unwrap().sum()));
    assert_eq!(minimal_exponent_from_jumps(sp), minimal_exponent(sp));
}

fn check_routes(f: &Polynomial) {
    let r = full_report(f, &Config::default()).unwrap();
    assert!(r.consistent(), "{f}");
    let class = build_class(&r.spectrum, "0");
    for k in 0..=r.checked_up_to {
        let e = classify_by_exponent(&r.alpha, k);
        assert_eq!(e, classify_by_jumping(&r.spectrum, k), "{f} k={k}");
        assert_eq!(e, classify_by_class(&class, k), "{f} k={k}");
        // rational(k) ⟹ duBois(k) ⟹ rational(k-1); monotone in k
        assert!(!e.rational || e.du_bois);
        if k >= 1 {
            let prev = classify_by_exponent(&r.alpha, k - 1);
            assert!(!e.du_bois || prev.rational);
            assert!(!e.du_bois || prev.du_bois);
            assert!(!e.rational || prev.rational);
        }
    }
    let (Level::Finite(d), Level::Finite(q)) = (r.max_du_bois, r.max_rational) else { panic!("{f}") };
    assert!(q <= d && d <= q + 1);
}

const SAMPLES: &[&str] = &[
    "x^2 + y^3",
    "x^2*y + y^3",
    "x^2*y + y^4",
    "x^3 + y^4",
    "x^3 + x*y^3",
    "x^3 + y^5",
    "x*y",
    "x*y + z^3",
    "x^2*y + y^3 + z^2",
    "x^3 + y^3 + z^3",
    "x^2 + y^2 + z^2 + w^2",
    "x^3 + y^3 + z^3 + w^2",
    "x^4 + y^4 + z^4",
];

#[test]
fn sample_invariants_and_routes() {
    for text in SAMPLES {
        check_invariants(&poly(text));
        check_routes(&poly(text));
    }
}

#[test]
fn sums_of_squares() {
    for n in 2..=6usize {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let text: Vec<String> = names.iter().map(|v| format!("{v}^2")).collect();
        let f = parse(&text.join("+"), &names).unwrap();
        let a = analyze(&f, &Config::default()).unwrap();
        assert_eq!(a.spectrum, Spectrum::from_entries(n, [(ratio(n as i64, 2), 1)]));
    }
}

#[test]
fn e7_and_d4_spectra() {
    // E7: weights (1/3, 2/9); Milnor basis has 7 monomials
    let a = analyze(&poly("x^3 + x*y^3"), &Config::default()).unwrap();
    assert_eq!(a.milnor, 7);
    assert_eq!(minimal_exponent(&a.spectrum).finite().cloned(), Some(ratio(5, 9)));
    // D4 = x^2 y + y^3: weights (1/3, 1/3), μ = 4, spectrum {2/3, 1, 1, 4/3}
    let a = analyze(&poly("x^2*y + y^3"), &Config::default()).unwrap();
    assert_eq!(a.spectrum, Spectrum::from_entries(2, [(ratio(2, 3), 1), (ratio(1, 1), 2), (ratio(4, 3), 1)]));
}

#[test]
fn invariant_under_permutation_and_scaling() {
    for text in ["x^2*y + y^4", "x^3 + x*y^3", "x^2*y + y^3 + z^2", "x^3 + y^4 + z^5"] {
        let f = poly(text);
        let n = f.nvars();
        let base = analyze(&f, &Config::default()).unwrap().spectrum;
        let perm: Vec<usize> = (0..n).rev().collect();
        assert_eq!(analyze(&f.permute_variables(&perm), &Config::default()).unwrap().spectrum, base);
        let factors: Vec<Rational> = (0..n).map(|i| ratio(-(i as i64) - 2, 3)).collect();
        assert_eq!(analyze(&f.scale_variables(&factors), &Config::default()).unwrap().spectrum, base);
    }
}

#[test]
fn results_do_not_depend_on_order() {
    for text in SAMPLES {
        let f = poly(text);
        let base = analyze(&f, &Config::default()).unwrap();
        for order in [explab_core::OrderKind::Lex, explab_core::OrderKind::Grlex] {
            let other = analyze(&f, &Config { order, ..Config::default() }).unwrap();
            assert_eq!(other.spectrum, base.spectrum, "{text} under {order}");
        }
    }
}

#[test]
fn declared_but_unused_variable_is_not_isolated() {
    let f = parse("x^2 + y^3", &vars(&["x", "y", "z"])).unwrap();
    assert!(matches!(analyze(&f, &Config::default()), Err(explab_core::Error::NotIsolated { .. })));
}

fn spectrum_strategy() -> impl Strategy<Value = Spectrum> {
    prop::collection::vec(2u32..=5, 1..=2).prop_map(|d| brieskorn_pham_oracle(&d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn brieskorn_pham_matches_oracle(degrees in prop::collection::vec(2u32..=5, 2..=3)) {
        let f = brieskorn_pham(&degrees);
        let a = analyze(&f, &Config::default()).unwrap();
        prop_assert_eq!(&a.spectrum, &brieskorn_pham_oracle(&degrees));
        check_invariants(&f);
        check_routes(&f);
    }

    #[test]
    fn convolution_laws(a in spectrum_strategy(), b in spectrum_strategy(), c in spectrum_strategy()) {
        prop_assert_eq!(convolve(&a, &b), convolve(&b, &a));
        prop_assert_eq!(convolve(&convolve(&a, &b), &c), convolve(&a, &convolve(&b, &c)));
        prop_assert_eq!(convolve(&a, &b).total_mass(), a.total_mass() * b.total_mass());
        prop_assert!(convolve(&a, &b).is_symmetric());
    }
}
