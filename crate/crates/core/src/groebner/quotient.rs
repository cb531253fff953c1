use std::collections::{BTreeSet, VecDeque};

use super::GroebnerBasis;
use crate::error::{Error, Result};
use crate::poly::Monomial;

/// Standard monomials of a Gröbner basis (those divisible by no leading monomial), sorted
/// ascending under the basis order.
///
/// The set is finite iff every variable has a pure power among the leading monomials;
/// otherwise this fails with [`Error::NotZeroDimensional`] naming the first free variable.
/// The unit ideal yields an empty basis.
pub fn quotient_basis(basis: &GroebnerBasis) -> Result<Vec<Monomial>> {
    let leads = basis.leading_monomials();
    let n = basis.variables().len();
    if basis.is_unit_ideal() {
        return Ok(Vec::new());
    }
    let bounded: BTreeSet<usize> = leads.iter().filter_map(Monomial::pure_power_var).collect();
    if let Some(free) = (0..n).find(|i| !bounded.contains(i)) {
        return Err(Error::NotZeroDimensional { variable: basis.variables()[free].clone() });
    }

    // The standard monomials form an order ideal, so a walk upward from 1 finds all of them.
    let mut seen: BTreeSet<Monomial> = BTreeSet::new();
    let mut queue = VecDeque::from([Monomial::one(n)]);
    seen.insert(Monomial::one(n));
    while let Some(m) = queue.pop_front() {
        for i in 0..n {
            let next = m.times_var(i);
            if !seen.contains(&next) && !leads.iter().any(|l| l.divides(&next)) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| basis.order().compare(a, b));
    Ok(out)
}
