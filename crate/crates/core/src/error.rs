use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("could not parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("enumeration of {needed} objects exceeds the budget of {budget}")]
    Budget { needed: u128, budget: u128 },

    /// A removable singularity (division by t, by a monomial) left a remainder.
    #[error("series cancellation failed: {0}")]
    Cancellation(String),

    #[error("hypergeometric series does not terminate: no upper parameter is a non-positive integer")]
    NonTerminating,

    #[error("hypergeometric series undefined: lower parameter {param} vanishes at term {index}")]
    UndefinedSeries { param: String, index: usize },

    #[error("sum S_{0} has no closed form")]
    UnsupportedIndex(u8),

    #[error("value {value} is not divisible by {divisor} (index {index})")]
    NonIntegral {
        index: usize,
        value: String,
        divisor: String,
    },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}
