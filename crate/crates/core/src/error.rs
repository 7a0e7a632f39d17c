use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("length mismatch: expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("degree mismatch: expected {expected:?}, found {found:?}")]
    DegreeMismatch { expected: Vec<u32>, found: Vec<u32> },

    #[error("polynomial is not homogeneous: {0}")]
    Inhomogeneous(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown variable block `{0}`")]
    UnknownBlock(String),

    #[error("subspaces are not complementary")]
    NotComplementary,

    #[error("involution is trivial (matrix is a scalar multiple of the identity)")]
    TrivialInvolution,

    #[error("matrix does not square to a nonzero scalar")]
    NotInvolution,

    #[error("matrix squares to {0}, which is not the square of a rational")]
    NonSquareScale(String),

    #[error("variety is not invariant under the involution")]
    NotInvariant,

    #[error("projection onto base space {0} is identically zero")]
    ZeroProjection(u8),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("schema error in `{field}`: {message}")]
    Schema { field: String, message: String },
}
