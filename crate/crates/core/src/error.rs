use thiserror::Error;

/// Errors raised by the engine, the expression parser and the fixture layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },

    #[error("expression mixes cochain degrees {first} and {second}")]
    MixedDegree { first: usize, second: usize },

    #[error("zero denominator at position {pos}")]
    ZeroDenominator { pos: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown algebra `{0}`")]
    UnknownAlgebra(String),

    #[error("unknown verification id `{0}`")]
    UnknownId(String),

    #[error("differential leaves homogeneous degree {d} in cochain degree {q}; the bivector is not linear")]
    DegreeViolation { q: usize, d: usize },

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("bivector is not invariant under the rotation T")]
    NotInvariant,

    #[error("malformed fixture `{id}`: {message}")]
    Fixture { id: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
