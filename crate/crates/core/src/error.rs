use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A caller-supplied value is outside the operation's domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("element {index} is zero; drop zero elements before combining")]
    ZeroElement { index: usize },

    #[error("no witness supplied for pair ({i}, {j})")]
    MissingWitness { i: usize, j: usize },

    #[error("witness for {context} does not verify")]
    InvalidWitness { context: String },

    /// An exact division that the algebra guarantees came out inexact.
    /// Either the inputs break the ring assumptions or there is a bug.
    #[error("exact division failed while computing {0}")]
    DivisionFailed(&'static str),

    #[error("independent gcd routes disagree: {0}")]
    OracleDisagreement(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn bad_witness(context: impl Into<String>) -> Self {
        Error::InvalidWitness {
            context: context.into(),
        }
    }

    /// True for errors caused by the caller's data rather than by an
    /// internal inconsistency.
    pub fn is_input_error(&self) -> bool {
        !matches!(
            self,
            Error::DivisionFailed(_) | Error::OracleDisagreement(_)
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
