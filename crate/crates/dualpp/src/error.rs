use crate::kernel::{Field, Q};
use crate::report::VerificationReport;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error<S: Field = Q> {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not invertible: rank {rank} of {size}")]
    NotInvertible { rank: usize, size: usize },
    #[error("series composition needs an inner series with zero constant term")]
    CompositionDomain,
    #[error("missing operation \"{0}\"")]
    MissingOperation(String),
    #[error("invalid argument: {0}")]
    Invalid(String),
    #[error("{context}")]
    Precondition {
        context: String,
        report: Box<VerificationReport<S>>,
    },
}

impl<S: Field> Error<S> {
    pub fn precondition(context: impl Into<String>, report: VerificationReport<S>) -> Self {
        Error::Precondition {
            context: context.into(),
            report: Box::new(report),
        }
    }

    /// The failing report carried by a precondition error.
    pub fn report(&self) -> Option<&VerificationReport<S>> {
        match self {
            Error::Precondition { report, .. } => Some(report),
            _ => None,
        }
    }
}

pub type Result<T, S = Q> = std::result::Result<T, Error<S>>;
