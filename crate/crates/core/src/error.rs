use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cartan type: {0}")]
    InvalidCartanType(String),
    #[error("not a root: {0:?}")]
    NotARoot(Vec<i64>),
    #[error("weight basis mismatch: {0}")]
    BasisMismatch(String),
    #[error("weight is not integral: {0}")]
    NonIntegral(String),
    #[error("weight is not dominant: {0}")]
    NotDominant(String),
    #[error("resource bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("window too shallow: {0}")]
    WindowTooShallow(String),
    #[error("invalid parabolic data: {0}")]
    InvalidParabolic(String),
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal consistency failure: {0}")]
    Internal(String),
    #[error("cache error: {0}")]
    Cache(String),
}

impl Error {
    /// Stable machine-readable tag used in CLI error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidCartanType(_) => "invalid_cartan_type",
            Error::NotARoot(_) => "not_a_root",
            Error::BasisMismatch(_) => "basis_mismatch",
            Error::NonIntegral(_) => "non_integral",
            Error::NotDominant(_) => "not_dominant",
            Error::BoundExceeded(_) => "bound_exceeded",
            Error::WindowTooShallow(_) => "window_too_shallow",
            Error::InvalidParabolic(_) => "invalid_parabolic",
            Error::OutOfRange(_) => "out_of_range",
            Error::Parse(_) => "parse",
            Error::Internal(_) => "internal",
            Error::Cache(_) => "cache",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
