use thiserror::Error;

/// Errors raised by the computational core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(u32, u32),

    #[error("precision {have} is below the required {need}")]
    InsufficientPrecision { have: usize, need: usize },

    #[error("Hecke eigenvalues in weight {weight} are not all rational")]
    UnsupportedHeckeField { weight: u32 },

    #[error("singular linear system: {0}")]
    SingularSystem(String),

    #[error("expansion is not a cusp form of weight {0}")]
    NotCuspForm(u32),

    #[error("matrix is not positive semi-definite")]
    NotPsd,

    #[error("matrix is degenerate")]
    Degenerate,

    #[error("enumeration requires {needed} points but the budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("certificate verification failed: {0}")]
    CertificateMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
