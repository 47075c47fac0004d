use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rational literal {0:?}")]
    ParseRational(String),
    #[error("invalid group label {0:?}")]
    UnknownLabel(String),
    #[error("polynomial division by zero")]
    DivisionByZero,
    #[error("{0}: zero polynomial not allowed")]
    ZeroPolynomial(&'static str),
    #[error("{op}: degree {found} is below the minimum {min}")]
    DegreeTooSmall { op: &'static str, found: usize, min: usize },
    #[error("constant term b must be nonzero")]
    ZeroConstant,
    #[error("{0} is reducible over Q")]
    Reducible(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("{0}")]
    NotASquare(String),
    #[error("{0} is not an odd prime")]
    InvalidPrime(u64),
    #[error("prime budget {0} is below the minimum of 100")]
    BudgetTooSmall(usize),
    #[error("roots not separable at {0} bits")]
    Precision(u32),
}

pub type Result<T> = std::result::Result<T, Error>;
