//! Pipeline settings resolved from flags, then environment, then defaults.

use explab_core::{Config, OrderKind};

pub const ORDER_ENV: &str = "EXPLAB_ORDER";
pub const BUDGET_ENV: &str = "EXPLAB_BUDGET";

/// `lookup` stands in for `std::env::var` so precedence can be tested without touching the
/// process environment.
pub fn resolve<F>(order_flag: Option<&str>, budget_flag: Option<usize>, lookup: F) -> Result<Config, String>
where
    F: Fn(&str) -> Option<String>,
{
    let mut config = Config::default();
    if let Some(text) = order_flag.map(str::to_string).or_else(|| lookup(ORDER_ENV)) {
        config.order = text.parse::<OrderKind>()?
    }
    match budget_flag {
        Some(b) => config.budget = b,
        None => {
            if let Some(text) = lookup(BUDGET_ENV) {
                config.budget =
                    text.trim().parse().map_err(|_| format!("{BUDGET_ENV}: `{text}` is not a non-negative integer"))?;
            }
        }
    }
    Ok(config)
}

pub fn from_env(order_flag: Option<&str>, budget_flag: Option<usize>) -> Result<Config, String> {
    resolve(order_flag, budget_flag, |k| std::env::var(k).ok())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn env(pairs: &'static [(&'static str, &'static str)]) -> impl Fn(&str) -> Option<String> {
        move |k| pairs.iter().find(|(name, _)| *name == k).map(|(_, v)| v.to_string())
    }

    #[test]
    fn defaults() {
        assert_eq!(resolve(None, None, env(&[])).unwrap(), Config::default());
    }

    #[test]
    fn environment_over_defaults() {
        let c = resolve(None, None, env(&[(ORDER_ENV, "lex"), (BUDGET_ENV, "42")])).unwrap();
        assert_eq!((c.order, c.budget), (OrderKind::Lex, 42));
    }

    #[test]
    fn flags_over_environment() {
        let c = resolve(Some("grlex"), Some(7), env(&[(ORDER_ENV, "lex"), (BUDGET_ENV, "42")])).unwrap();
        assert_eq!((c.order, c.budget), (OrderKind::Grlex, 7));
    }

    #[test]
    fn bad_values() {
        assert!(resolve(None, None, env(&[(ORDER_ENV, "nope")])).is_err());
        assert!(resolve(None, None, env(&[(BUDGET_ENV, "-3")])).is_err());
    }
}
