use thiserror::Error;

/// Errors raised while building or analysing finite structures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("table shape error: {0}")]
    TableShape(String),

    /// A ring or module axiom failed; `witness` holds the offending element indices.
    #[error("axiom `{axiom}` violated at {witness:?}")]
    AxiomViolation { axiom: String, witness: Vec<usize> },

    #[error("expected a {expected} but got a {found}")]
    KindMismatch { expected: String, found: String },

    #[error("substructures belong to different parents")]
    ParentMismatch,

    #[error("structures are defined over different rings")]
    RingMismatch,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty list of factors")]
    EmptyList,

    #[error("the zero ring cannot carry modules")]
    ZeroBaseRing,

    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    SizeGuardExceeded {
        what: String,
        actual: usize,
        limit: usize,
    },

    #[error("submodule is not proper")]
    NotProper,

    #[error("map is not surjective")]
    NotEpimorphism,

    #[error("kernel is not contained in the given submodule")]
    KernelNotContained,

    #[error("element {index} out of range for structure of size {size}")]
    OutOfRange { index: usize, size: usize },

    /// The three ring-level 2-primality criteria disagree. Always an engine bug.
    #[error("2-primality criteria disagree on `{ring}`: {detail}")]
    CharacterizationMismatch { ring: String, detail: String },

    /// A structural claim that must hold for every module failed.
    #[error("invariant breach: {0}")]
    InvariantBreach(String),

    #[error("configuration error at `{path}`: {message}")]
    Config { path: String, message: String },

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("predicate parse error: {0}")]
    Predicate(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn axiom(axiom: &str, witness: &[usize]) -> Self {
        Error::AxiomViolation {
            axiom: axiom.to_string(),
            witness: witness.to_vec(),
        }
    }

    pub(crate) fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Config {
            path: path.into(),
            message: message.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
