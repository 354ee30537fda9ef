use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("polynomials live over different generator alphabets")]
    AlphabetMismatch,

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: u32, found: u32 },

    #[error("monomial {0} is not in the supplied basis")]
    MonomialNotInBasis(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("parse error at offset {offset} near `{token}`: {message}")]
    Parse {
        offset: usize,
        token: String,
        message: String,
    },

    #[error("invalid query: {0}")]
    InvalidQuery(String),

    #[error("degree {requested} exceeds the model bound {bound}")]
    DegreeBound { requested: u32, bound: u32 },
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidQuery(msg.into())
    }
}
