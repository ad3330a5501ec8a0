use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?}")]
    NotAPartition(Vec<usize>),

    #[error("size mismatch: {left} != {right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("{what}: size {got} exceeds bound {bound}")]
    BoundExceeded {
        what: &'static str,
        got: usize,
        bound: usize,
    },

    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("word of length {got} does not fit a shape with {expected} cells")]
    LengthMismatch { expected: usize, got: usize },

    #[error("row lengths do not match the skew shape")]
    ShapeMismatch,

    #[error("{0} is not included in {1}")]
    NotIncluded(String, String),

    #[error("filling is not a (skew) tableau")]
    NotATableau,

    #[error("malformed RS pair: {0}")]
    MalformedPair(&'static str),

    #[error("not a permutation: {0:?}")]
    NotAPermutation(Vec<usize>),

    #[error("need at least {needed} variables, got {got}")]
    TooFewVariables { needed: usize, got: usize },

    #[error("monomial extraction left a nonzero residual")]
    NonzeroResidual,
}

pub type Result<T> = std::result::Result<T, Error>;
