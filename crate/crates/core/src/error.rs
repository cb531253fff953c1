use thiserror::Error;

use crate::poly::ParseError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("variable index {index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },
    #[error("polynomials are over different variable lists")]
    VariableMismatch,
    #[error("no nonzero generators")]
    NoGenerators,
    #[error("S-pair budget of {budget} reductions exceeded")]
    BudgetExceeded { budget: usize },
    #[error("ideal is not zero-dimensional: no pure power of `{variable}` among leading monomials")]
    NotZeroDimensional { variable: String },

    #[error("input is constant or zero")]
    ConstantInput,
    #[error("input does not vanish at the origin (constant term {constant})")]
    NonzeroConstantTerm { constant: String },
    #[error("input is not reduced: it has a repeated factor ({factor})")]
    NotSquarefree { factor: String },
    #[error("input is not quasi-homogeneous: the weight system is inconsistent")]
    NotQuasiHomogeneous,
    #[error("weight system is underdetermined")]
    WeightsNotUnique,
    #[error("weights {weights} are not all in (0, 1)")]
    WeightsOutOfRange { weights: String },
    #[error("singularity at the origin is not isolated ({detail})")]
    NotIsolated { detail: String },
}

impl Error {
    /// Stable diagnostic name used in machine-readable output.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "ParseError",
            Error::VariableIndex { .. } => "VariableIndex",
            Error::VariableMismatch => "VariableMismatch",
            Error::NoGenerators => "NoGenerators",
            Error::BudgetExceeded { .. } => "ResourceLimit",
            Error::NotZeroDimensional { .. } => "NotZeroDimensional",
            Error::ConstantInput => "ConstantInput",
            Error::NonzeroConstantTerm { .. } => "NonzeroConstantTerm",
            Error::NotSquarefree { .. } => "NotSquarefree",
            Error::NotQuasiHomogeneous => "NotQuasiHomogeneous",
            Error::WeightsNotUnique => "WeightsNotUnique",
            Error::WeightsOutOfRange { .. } => "WeightsOutOfRange",
            Error::NotIsolated { .. } => "NotIsolated",
        }
    }

    /// True for errors caused by the input falling outside the supported class, as opposed to
    /// resource limits or API misuse.
    pub fn is_inadmissible(&self) -> bool {
        matches!(
            self,
            Error::Parse(_)
                | Error::ConstantInput
                | Error::NonzeroConstantTerm { .. }
                | Error::NotSquarefree { .. }
                | Error::NotQuasiHomogeneous
                | Error::WeightsNotUnique
                | Error::WeightsOutOfRange { .. }
                | Error::NotIsolated { .. }
        )
    }
}
