use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("continued fraction digits must be positive")]
    ZeroDigit,

    #[error("empty word has no continued fraction expansion")]
    EmptyWord,

    #[error("malformed input {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("surds live in different quadratic fields (sqrt {0} and sqrt {1})")]
    FieldMismatch(String, String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("radicand must be a positive non-square integer, got {0}")]
    BadRadicand(String),

    #[error("({0}, {1}, {2}) does not solve x^2 + y^2 + z^2 = 3xyz")]
    NotMarkovTriple(String, String, String),

    #[error("{0} is not a prime >= 3")]
    NotPrime(u64),

    #[error("word set is empty")]
    EmptyWordSet,

    #[error("word set is not primitive: {prefix} is a prefix of {word}")]
    NotPrimitive { prefix: String, word: String },

    #[error("enumeration budget exceeded: {needed} items requested, budget is {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },

    #[error("truncated determinant has no sign change on [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_owned(),
            reason: reason.into(),
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}

/// Fails with [`Error::BudgetExceeded`] when `needed > budget`.
pub(crate) fn check_budget(needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded { needed, budget })
    } else {
        Ok(())
    }
}
