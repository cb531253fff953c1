//! Buchberger's algorithm over ℚ.
//!
//! Pairs are selected by the normal strategy (smallest lcm first) and filtered with the
//! coprime-leading-monomial and chain criteria. Every S-polynomial reduction counts against
//! a budget so that runaway inputs surface as [`Error::BudgetExceeded`].

mod order;
mod quotient;

use std::cmp::Ordering;
use std::collections::BTreeSet;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Polynomial, Rational};

pub use order::{MonomialOrder, OrderKind};
pub use quotient::quotient_basis;

pub const DEFAULT_BUDGET: usize = 100_000;

/// Terms in ascending order, so the leading term sits at the end.
type Terms = Vec<(Monomial, Rational)>;

fn to_terms(p: &Polynomial, order: &MonomialOrder) -> Terms {
    let mut terms: Terms = p.terms().map(|(m, c)| (m.clone(), c.clone())).collect();
    terms.sort_by(|a, b| order.compare(&a.0, &b.0));
    terms
}

fn from_terms(terms: &Terms, variables: &[String]) -> Polynomial {
    Polynomial::from_terms(variables.to_vec(), terms.iter().cloned())
}

/// `p - c * m * q`, with both inputs and the output ascending.
fn sub_scaled(
    p: &[(Monomial, Rational)],
    c: &Rational,
    m: &Monomial,
    q: &[(Monomial, Rational)],
    order: &MonomialOrder,
) -> Terms {
    let mut out = Vec::with_capacity(p.len() + q.len());
    let mut shifted = q.iter().map(|(qm, qc)| (qm.mul(m), qc * c)).peekable();
    let mut p = p.iter().cloned().peekable();
    loop {
        let ord = match (p.peek(), shifted.peek()) {
            (None, None) => break,
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (Some(a), Some(b)) => order.compare(&a.0, &b.0),
        };
        match ord {
            Ordering::Less => out.push(p.next().unwrap()),
            Ordering::Greater => {
                let (sm, sc) = shifted.next().unwrap();
                out.push((sm, -sc));
            }
            Ordering::Equal => {
                let (pm, pc) = p.next().unwrap();
                let (_, sc) = shifted.next().unwrap();
                let v = pc - sc;
                if !v.is_zero() {
                    out.push((pm, v));
                }
            }
        }
    }
    out
}

fn make_monic(terms: &mut Terms) {
    if let Some((_, lc)) = terms.last() {
        if !lc.is_one() {
            let inv = lc.recip();
            for (_, c) in terms.iter_mut() {
                *c *= &inv;
            }
        }
    }
}

/// Full reduction of `p` by `basis` (every term, not just the leading one).
fn reduce(mut p: Terms, basis: &[&Terms], order: &MonomialOrder) -> Terms {
    let mut remainder: Terms = Vec::new();
    while let Some((lm, lc)) = p.pop() {
        let divisor = basis.iter().find(|g| g.last().is_some_and(|(gm, _)| gm.divides(&lm)));
        match divisor {
            Some(g) => {
                let (gm, gc) = g.last().unwrap();
                let factor = &lc / gc;
                let shift = lm.div(gm).unwrap();
                p = sub_scaled(&p, &factor, &shift, &g[..g.len() - 1], order);
            }
            None => remainder.push((lm, lc)),
        }
    }
    remainder.reverse();
    remainder
}

fn s_polynomial(f: &Terms, g: &Terms, order: &MonomialOrder) -> Terms {
    let (fm, fc) = f.last().unwrap();
    let (gm, gc) = g.last().unwrap();
    let lcm = fm.lcm(gm);
    let f_shift = lcm.div(fm).unwrap();
    let g_shift = lcm.div(gm).unwrap();
    // (lcm/fm)/fc * f - (lcm/gm)/gc * g, with both leading terms cancelling
    let f_scaled: Terms = f[..f.len() - 1].iter().map(|(m, c)| (m.mul(&f_shift), c / fc)).collect();
    sub_scaled(&f_scaled, &gc.recip(), &g_shift, &g[..g.len() - 1], order)
}

/// Reduced Gröbner basis: monic generators, no term of one divisible by another's leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    variables: Vec<String>,
    order: MonomialOrder,
    polys: Vec<Terms>,
}

impl GroebnerBasis {
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn generators(&self) -> Vec<Polynomial> {
        self.polys.iter().map(|t| from_terms(t, &self.variables)).collect()
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|t| t.last().unwrap().0.clone()).collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(|t| t.len() == 1 && t[0].0.is_one())
    }

    /// Remainder of `p` on division by the basis; zero iff `p` lies in the ideal.
    pub fn normal_form(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.variables() != self.variables.as_slice() {
            return Err(Error::VariableMismatch);
        }
        let refs: Vec<&Terms> = self.polys.iter().collect();
        Ok(from_terms(&reduce(to_terms(p, &self.order), &refs, &self.order), &self.variables))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }
}

/// Free-function form of [`GroebnerBasis::normal_form`].
pub fn normal_form(p: &Polynomial, basis: &GroebnerBasis) -> Result<Polynomial> {
    basis.normal_form(p)
}

/// Reduced Gröbner basis of the ideal generated by `gens`, with the default S-pair budget.
pub fn groebner(gens: &[Polynomial], order: &MonomialOrder) -> Result<GroebnerBasis> {
    groebner_with_budget(gens, order, DEFAULT_BUDGET)
}

pub fn groebner_with_budget(gens: &[Polynomial], order: &MonomialOrder, budget: usize) -> Result<GroebnerBasis> {
    let first = gens.first().ok_or(Error::NoGenerators)?;
    let variables = first.variables().to_vec();
    if gens.iter().any(|g| g.variables() != variables.as_slice()) || order.nvars() != variables.len() {
        return Err(Error::VariableMismatch);
    }
    let mut basis: Vec<Terms> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let mut t = to_terms(g, order);
            make_monic(&mut t);
            t
        })
        .collect();
    if basis.is_empty() {
        return Err(Error::NoGenerators);
    }

    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    let lm = |t: &Terms| t.last().unwrap().0.clone();
    let mut reductions = 0usize;

    while !pairs.is_empty() {
        // normal strategy: smallest lcm of leading monomials first
        let &(i, j) = pairs
            .iter()
            .min_by(|a, b| {
                let la = lm(&basis[a.0]).lcm(&lm(&basis[a.1]));
                let lb = lm(&basis[b.0]).lcm(&lm(&basis[b.1]));
                order.compare(&la, &lb).then_with(|| a.cmp(b))
            })
            .unwrap();
        pairs.remove(&(i, j));

        let (mi, mj) = (lm(&basis[i]), lm(&basis[j]));
        if mi.is_coprime(&mj) {
            continue;
        }
        let lcm = mi.lcm(&mj);
        let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lm(&basis[k]).divides(&lcm)
                && !pairs.contains(&key(i, k))
                && !pairs.contains(&key(j, k))
        });
        if chain {
            continue;
        }

        reductions += 1;
        if reductions > budget {
            return Err(Error::BudgetExceeded { budget });
        }
        let s = s_polynomial(&basis[i], &basis[j], order);
        let refs: Vec<&Terms> = basis.iter().collect();
        let mut h = reduce(s, &refs, order);
        if h.is_empty() {
            continue;
        }
        make_monic(&mut h);
        let new = basis.len();
        basis.push(h);
        for k in 0..new {
            pairs.insert((k, new));
        }
    }

    Ok(GroebnerBasis { polys: interreduce(basis, order), variables, order: order.clone() })
}

/// Turns a Gröbner basis into the reduced one.
fn interreduce(mut basis: Vec<Terms>, order: &MonomialOrder) -> Vec<Terms> {
    basis.sort_by(|a, b| order.compare(&a.last().unwrap().0, &b.last().unwrap().0));
    let mut minimal: Vec<Terms> = Vec::new();
    for g in basis {
        let gm = &g.last().unwrap().0;
        if !minimal.iter().any(|h| h.last().unwrap().0.divides(gm)) {
            minimal.push(g);
        }
    }
    let mut reduced = Vec::with_capacity(minimal.len());
    for idx in 0..minimal.len() {
        let others: Vec<&Terms> = minimal.iter().enumerate().filter(|(k, _)| *k != idx).map(|(_, t)| t).collect();
        let mut g = minimal[idx].clone();
        let lead = g.pop().unwrap();
        let mut tail = reduce(g, &others, order);
        tail.push(lead);
        make_monic(&mut tail);
        reduced.push(tail);
    }
    reduced.sort_by(|a, b| order.compare(&b.last().unwrap().0, &a.last().unwrap().0));
    reduced
}
