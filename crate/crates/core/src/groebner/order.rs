use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::poly::Monomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderKind {
    Grevlex,
    Lex,
    Grlex,
}

impl FromStr for OrderKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "grevlex" | "degrevlex" => Ok(OrderKind::Grevlex),
            "lex" | "plex" => Ok(OrderKind::Lex),
            "grlex" | "deglex" => Ok(OrderKind::Grlex),
            other => Err(format!("unknown monomial order `{other}` (expected grevlex, lex or grlex)")),
        }
    }
}

impl fmt::Display for OrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderKind::Grevlex => "grevlex",
            OrderKind::Lex => "lex",
            OrderKind::Grlex => "grlex",
        })
    }
}

/// A monomial order together with a variable ranking.
///
/// `ranking[0]` is the index of the most significant variable. With the identity ranking
/// the variables compare as `x_0 > x_1 > ... > x_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    kind: OrderKind,
    ranking: Vec<usize>,
}

impl MonomialOrder {
    pub fn new(kind: OrderKind, nvars: usize) -> Self {
        MonomialOrder { kind, ranking: (0..nvars).collect() }
    }

    pub fn grevlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grevlex, nvars)
    }

    pub fn lex(nvars: usize) -> Self {
        Self::new(OrderKind::Lex, nvars)
    }

    pub fn grlex(nvars: usize) -> Self {
        Self::new(OrderKind::Grlex, nvars)
    }

    /// Panics unless `ranking` is a permutation of `0..n`.
    pub fn with_ranking(kind: OrderKind, ranking: Vec<usize>) -> Self {
        let mut seen = vec![false; ranking.len()];
        for &i in &ranking {
            assert!(i < ranking.len() && !seen[i], "variable ranking must be a permutation");
            seen[i] = true;
        }
        MonomialOrder { kind, ranking }
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    pub fn nvars(&self) -> usize {
        self.ranking.len()
    }

    fn lex_cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        for &i in &self.ranking {
            match a[i].cmp(&b[i]) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        match self.kind {
            OrderKind::Lex => self.lex_cmp(ea, eb),
            OrderKind::Grlex => a.degree().cmp(&b.degree()).then_with(|| self.lex_cmp(ea, eb)),
            OrderKind::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for &i in self.ranking.iter().rev() {
                    match ea[i].cmp(&eb[i]) {
                        Ordering::Equal => continue,
                        other => return other.reverse(),
                    }
                }
                Ordering::Equal
            }),
        }
    }
}
