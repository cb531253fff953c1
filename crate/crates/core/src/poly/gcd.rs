//! Multivariate gcd over ℚ by recursion on a main variable with primitive remainder sequences.

use std::collections::BTreeMap;

use super::{Monomial, Polynomial, Rational};

/// Largest term in lex order with `x_0 > x_1 > ...`, which is the last key of the term map.
fn lex_leading(p: &Polynomial) -> Option<(&Monomial, &Rational)> {
    p.terms.iter().next_back()
}

fn lex_monic(p: &Polynomial) -> Polynomial {
    match lex_leading(p) {
        Some((_, c)) => p.scale(&c.recip()),
        None => p.clone(),
    }
}

/// `a / b` when the division is exact, `None` otherwise.
pub(crate) fn div_exact(a: &Polynomial, b: &Polynomial) -> Option<Polynomial> {
    let (lb_mono, lb_coeff) = lex_leading(b)?;
    let mut rem = a.clone();
    let mut quotient = Polynomial::zero(a.variables.clone());
    while let Some((lm, lc)) = lex_leading(&rem) {
        let factor_mono = lm.div(lb_mono)?;
        let factor = Polynomial::from_terms(a.variables.clone(), [(factor_mono, lc / lb_coeff)]);
        rem = &rem - &(&factor * b);
        quotient = &quotient + &factor;
    }
    Some(quotient)
}

/// Coefficients of `p` viewed as a polynomial in `x_v`, keyed by the power of `x_v`.
fn coefficients_in(p: &Polynomial, v: usize) -> BTreeMap<u32, Polynomial> {
    let mut buckets: BTreeMap<u32, Vec<(Monomial, Rational)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        let mut exps = m.exponents().to_vec();
        let e = exps[v];
        exps[v] = 0;
        buckets.entry(e).or_default().push((Monomial::new(exps), c.clone()));
    }
    buckets.into_iter().map(|(e, ts)| (e, Polynomial::from_terms(p.variables.clone(), ts))).collect()
}

fn leading_coefficient_in(p: &Polynomial, v: usize) -> Polynomial {
    coefficients_in(p, v)
        .into_iter()
        .next_back()
        .map(|(_, c)| c)
        .unwrap_or_else(|| Polynomial::zero(p.variables.clone()))
}

fn content_in(p: &Polynomial, v: usize) -> Polynomial {
    let mut acc = Polynomial::zero(p.variables.clone());
    for (_, c) in coefficients_in(p, v) {
        acc = gcd(&acc, &c);
        if acc.is_constant() && !acc.is_zero() {
            break;
        }
    }
    acc
}

fn primitive_part_in(p: &Polynomial, v: usize) -> Polynomial {
    if p.is_zero() {
        return p.clone();
    }
    let content = content_in(p, v);
    div_exact(p, &content).expect("content divides polynomial")
}

/// Remainder of `a` by `b` in `x_v` after multiplying `a` through by powers of `lc_v(b)`.
fn pseudo_remainder(a: &Polynomial, b: &Polynomial, v: usize) -> Polynomial {
    let db = b.degree_in(v);
    let lb = leading_coefficient_in(b, v);
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = leading_coefficient_in(&r, v);
        let mut shift = vec![0; r.nvars()];
        shift[v] = dr - db;
        r = &(&lb * &r) - &(&lr * &b.mul_monomial(&Monomial::new(shift)));
    }
    r
}

/// Greatest common divisor over ℚ, normalized to leading coefficient 1 in lex order.
///
/// `gcd(0, 0)` is `0`. Both arguments must share a variable list.
pub fn gcd(a: &Polynomial, b: &Polynomial) -> Polynomial {
    assert_eq!(a.variables, b.variables, "gcd of polynomials over different variable lists");
    if a.is_zero() {
        return lex_monic(b);
    }
    if b.is_zero() {
        return lex_monic(a);
    }
    if a.is_constant() || b.is_constant() {
        return Polynomial::one(a.variables.clone());
    }
    let v = (0..a.nvars())
        .find(|&i| a.degree_in(i) > 0 || b.degree_in(i) > 0)
        .expect("nonconstant polynomial has a variable");

    let content = gcd(&content_in(a, v), &content_in(b, v));
    let pa = primitive_part_in(a, v);
    let pb = primitive_part_in(b, v);
    let (mut x, mut y) = if pa.degree_in(v) >= pb.degree_in(v) { (pa, pb) } else { (pb, pa) };
    while !y.is_zero() {
        if y.degree_in(v) == 0 {
            x = Polynomial::one(a.variables.clone());
            break;
        }
        let r = pseudo_remainder(&x, &y, v);
        x = y;
        y = primitive_part_in(&r, v);
    }
    let g = primitive_part_in(&x, v);
    lex_monic(&(&content * &g))
}

/// True iff `f` has no repeated factor over ℚ, decided as: `gcd(f, ∂f/∂x_1, ..., ∂f/∂x_n)` is constant.
///
/// Zero and constant polynomials are rejected by the caller; for them this returns `false`.
pub fn is_squarefree(f: &Polynomial) -> bool {
    if f.is_constant() {
        return false;
    }
    let mut g = f.clone();
    for d in f.gradient() {
        g = gcd(&g, &d);
        if g.is_constant() {
            return true;
        }
    }
    g.is_constant()
}
