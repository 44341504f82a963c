use thiserror::Error;

use crate::plane::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),

    #[error("unsupported field GF({p}^{k}): {reason}")]
    UnsupportedField { p: u32, k: u32, reason: String },

    #[error("invalid modulus for GF({p}^{k}): {reason}")]
    InvalidModulus { p: u32, k: u32, reason: String },

    #[error("elements belong to different fields")]
    MixedFields,

    #[error("zero has no multiplicative inverse")]
    ZeroInverse,

    #[error("the zero vector is not a projective point")]
    ZeroTriple,

    #[error("plane order {0} is outside the supported range 2..=32")]
    UnsupportedOrder(u32),

    #[error("{0} is not a prime power")]
    NotPrimePower(u32),

    #[error("q must be an even prime power (got {0})")]
    NotSquareOrder(u32),

    #[error("plane has no coordinates; supply an explicit polarity")]
    MissingCoordinates,

    #[error("plane failed validation: {0}")]
    InvalidPlane(ValidationReport),

    #[error("polarity failed validation: {0}")]
    InvalidPolarity(ValidationReport),

    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("vertex {0} is an absolute point")]
    AbsoluteVertex(u32),

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph is not regular")]
    NotRegular,

    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),

    #[error("certificate describes {found} but the graph is {expected}")]
    DescriptorMismatch { expected: String, found: String },

    #[error("strategy `{strategy}` does not apply: {reason}")]
    StrategyMismatch { strategy: String, reason: String },

    #[error("hypergraph has {0} vertices; the exact solver handles at most 128")]
    TooLarge(usize),

    #[error(
        "Jacobi iteration did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})"
    )]
    NoConvergence { sweeps: usize, off_norm: f64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
