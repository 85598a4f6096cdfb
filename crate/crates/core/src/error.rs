use thiserror::Error;

/// Errors produced by the codes, decoders and the verification harness.
///
/// Decode failures are ordinary results: the harness counts them instead of
/// aborting.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("decode failure: {0}")]
    DecodeFailure(String),
    #[error("rank {rank} has no preimage over the given multiset")]
    NoPreimage { rank: String },
    #[error("work budget exceeded: estimated {estimate} operations, budget is {budget}")]
    BudgetExceeded { estimate: u128, budget: u128 },
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub(crate) fn decode(msg: impl Into<String>) -> Self {
        Error::DecodeFailure(msg.into())
    }

    /// True for errors that mean "the received word could not be decoded",
    /// as opposed to malformed parameters.
    pub fn is_decode_failure(&self) -> bool {
        matches!(self, Error::DecodeFailure(_) | Error::NoPreimage { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
