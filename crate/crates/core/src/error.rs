use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("coefficient domains differ ({0} vs {1})")]
    DomainMismatch(String, String),

    #[error("resource budget of {limit} pair reductions exceeded")]
    BudgetExceeded { limit: usize },

    #[error("operation requires a proper ideal, got the unit ideal")]
    UnitIdeal,

    #[error("module is zero")]
    ZeroModule,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("components do not intersect to the given ideal")]
    IntersectionMismatch,

    #[error("value groups differ ({0} vs {1})")]
    GroupMismatch(String, String),

    #[error("inconclusive: {0}")]
    Inconclusive(String),

    #[error("submodule is not proper")]
    NotProperSubmodule,

    #[error("unknown example `{0}`")]
    UnknownExample(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
