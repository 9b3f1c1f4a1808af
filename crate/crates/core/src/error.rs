use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong in the workbench.
///
/// The variants are grouped by the exit code the command-line front end maps
/// them to: input errors, resource budgets, and internal defects.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unknown variable `{name}` at line {line}, column {column}")]
    UnknownVariable { name: String, line: usize, column: usize },
    #[error("negative exponent at line {line}, column {column}")]
    NegativeExponent { line: usize, column: usize },
    #[error("characteristic {0} is not an odd prime below 2^31")]
    NonPrime(u64),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("duplicate or reserved ideal name `{0}`")]
    BadIdealName(String),
    #[error("unknown ideal `{0}`")]
    UnknownIdeal(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("exponent vectors of length {0} and {1} cannot be compared")]
    LengthMismatch(usize, usize),
    #[error("division by zero")]
    DivisionByZero,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("postulation not reached before n = {n_max}")]
    PostulationNotReached { n_max: u32 },
    #[error("invalid semigroup: {0}")]
    Semigroup(String),
    #[error("io error: {0}")]
    Io(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::Budget(_))
    }
}
