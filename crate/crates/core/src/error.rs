use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree of zero polynomial")]
    DegreeOfZero,
    #[error("leading coefficient of zero polynomial")]
    LeadingCoefficientOfZero,
    #[error("exponent overflow in {0}")]
    ExponentOverflow(&'static str),
    #[error("substitution T -> T^0 is not allowed")]
    ZeroSubstitution,
    #[error("cannot evaluate a Laurent polynomial at 0")]
    EvaluationAtZero,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("({a}, {b}) is not admissible: {reason}")]
    Inadmissible { a: i64, b: i64, reason: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn inadmissible(a: i64, b: i64, reason: impl Into<String>) -> Self {
        Error::Inadmissible {
            a,
            b,
            reason: reason.into(),
        }
    }
}
