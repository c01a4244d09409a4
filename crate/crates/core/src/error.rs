use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot homogenize a degree {degree} polynomial to total degree {requested}")]
    DegreeTooSmall { degree: usize, requested: usize },

    #[error("h polynomial of family {family} has degree {degree}, at most 4 can be homogenized")]
    DegreeTooLarge { family: String, degree: usize },

    #[error("family {family} has arity {arity}: {reason}")]
    ArityMismatch {
        family: String,
        arity: u8,
        reason: &'static str,
    },

    #[error("integer root finding needs a non-constant polynomial")]
    ConstantPolynomial,

    #[error("solution is trivial (both sides are the same multiset of terms)")]
    TrivialSolution,

    #[error("quadruple does not satisfy A^4 + h*B^4 = C^4 + h*D^4")]
    NotASolution,

    #[error("h must be at least 1, got {0}")]
    NonPositiveH(String),

    #[error("bound {bound} exceeds the {what} ceiling of {ceiling}")]
    BoundTooLarge {
        bound: u64,
        ceiling: u64,
        what: &'static str,
    },

    #[error("numeric limit exceeded: {0}")]
    NumericLimit(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
