use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("pole: {0}")]
    Pole(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("not elliptic: {0}")]
    NotElliptic(String),
    #[error("image at infinity")]
    ImageAtInfinity,
    #[error("parameter outside the geodesic: {0}")]
    Boundary(String),
    #[error("invalid inertia type: {0}")]
    InvalidSignature(String),
    #[error("bad reduction at p = {p}: {reason}")]
    BadPrime { p: u64, reason: String },
    #[error("inconsistent point counts: {0}")]
    InconsistentCounts(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("no solution within the search box: {0}")]
    BoxExhausted(String),
    #[error("cache error: {0}")]
    Cache(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Short stable identifier used in machine-readable error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::Pole(_) => "pole",
            Error::Precondition(_) => "precondition",
            Error::NotElliptic(_) => "not_elliptic",
            Error::ImageAtInfinity => "image_at_infinity",
            Error::Boundary(_) => "boundary",
            Error::InvalidSignature(_) => "invalid_signature",
            Error::BadPrime { .. } => "bad_prime",
            Error::InconsistentCounts(_) => "inconsistent_counts",
            Error::InvariantViolation(_) => "invariant_violation",
            Error::BoxExhausted(_) => "box_exhausted",
            Error::Cache(_) => "cache",
            Error::Io(_) => "io",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
