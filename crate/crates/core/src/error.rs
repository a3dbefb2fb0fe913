use std::fmt;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Location {
    pub line: usize,
    pub column: usize,
}

impl fmt::Display for Location {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}", self.line, self.column)
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("the zero polynomial has no normal form")]
    ZeroPolynomial,

    #[error("polynomial is not reciprocal of even degree: {0}")]
    NotReciprocal(String),

    #[error("invalid Seifert matrix: {0}")]
    InvalidSeifert(String),

    #[error("certification failed below the precision cap of {cap} bits")]
    PrecisionExhausted { cap: u32 },

    #[error("{point} is a zero of the Alexander polynomial; the signature is undefined there")]
    SingularAtZ { point: String },

    #[error("a {n}-th root of unity is a zero of the Alexander polynomial")]
    SingularAtRootOfUnity { n: u64 },

    #[error("insufficient signature data: {0}")]
    InsufficientData(String),

    #[error("knot is not admissible: the {k}-fold cyclic cover has infinite torsion")]
    NotAdmissible { k: u64 },

    #[error("b1 of the {n}-fold cyclic cover of {knot} is {b1}, expected 1")]
    B1Violation { knot: String, n: u64, b1: u64 },

    #[error("inconsistent knot data for {knot}: {message}")]
    InconsistentInput { knot: String, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown knot '{0}'")]
    UnknownKnot(String),

    #[error("catalog error at {location}: {message}")]
    Catalog { location: Location, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
