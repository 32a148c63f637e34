use thiserror::Error;

/// Failures raised by function evaluation and quadrature.
///
/// Loss of accuracy is not an error: it is reported through
/// [`crate::numerics::Flags`] on the returned result.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: domain violation: {condition}")]
    Domain {
        function: &'static str,
        condition: String,
    },
    #[error("{function}: pole at {at}")]
    Pole { function: &'static str, at: String },
    #[error("non-integrable singularity at {endpoint}")]
    NonIntegrable { endpoint: &'static str },
    #[error("overflow in {context}")]
    Overflow { context: String },
}

impl Error {
    pub(crate) fn domain(function: &'static str, condition: impl Into<String>) -> Self {
        Error::Domain {
            function,
            condition: condition.into(),
        }
    }

    pub(crate) fn pole(function: &'static str, at: impl Into<String>) -> Self {
        Error::Pole {
            function,
            at: at.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
