use thiserror::Error;

/// Errors raised by the arithmetic layers and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is singular")]
    Singular,

    /// A denominator vanished at the chosen evaluation point.
    #[error("point is not admissible: denominator {denominator} vanishes")]
    NotAdmissible { denominator: String },

    #[error("target is not in the span of the given basis")]
    NotInSpan,

    #[error("subspace is not invariant under generator {index}")]
    NotInvariant { index: usize },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("no admissible point found with extension degree up to {max_nu}; raise the bound")]
    SearchExhausted { max_nu: u32 },

    #[error("retry budget of {budget} admissible points exhausted")]
    BudgetExhausted { budget: usize },

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

impl Error {
    /// True for failures caused by search or size limits rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            Error::SearchExhausted { .. } | Error::BudgetExhausted { .. } | Error::ResourceLimit(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
