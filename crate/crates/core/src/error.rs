use crate::formula::RatFormula;

/// Errors raised by the engine.
///
/// [`Error::Domain`] and [`Error::UndefinedInverse`] mean "the expression has
/// no value at this point"; everything else is an input error.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    #[error("undefined: {0}")]
    Domain(String),
    #[error("undefined: inverse of `{0}` does not exist at this point")]
    UndefinedInverse(RatFormula),
    #[error("index {index} is not a {axis} label")]
    UnknownIndex { axis: &'static str, index: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("unbound variable `{0}`")]
    Unbound(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }

    /// True when the failure is a point outside the domain of definition
    /// (a required inverse does not exist) rather than bad input.
    pub fn is_domain(&self) -> bool {
        matches!(self, Error::Domain(_) | Error::UndefinedInverse(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
