use thiserror::Error;

/// Errors raised by the algebra, module and group operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("kind mismatch for letter `{letter}`: {detail}")]
    KindMismatch { letter: String, detail: String },

    #[error("unknown letter `{0}`")]
    UnknownLetter(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("{what} of size {size} exceeds the cap {cap}")]
    SizeCap {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("truncation depth {required} required, cap is {cap}")]
    DepthCap { required: usize, cap: usize },

    #[error("weight at depth {0:?} lies outside the truncation")]
    OutOfTruncation(Vec<u32>),

    #[error("adjacent letters must differ (position {0})")]
    AdjacentRepeat(usize),

    #[error("group word is not reduced: {0}")]
    NonReduced(String),

    #[error("zero parameter on a torus factor")]
    ZeroTorusParam,

    #[error("input must be nonzero")]
    ZeroInput,

    #[error("invalid generalized Cartan matrix: {0}")]
    InvalidCartan(String),

    #[error("Cartan matrix is not symmetrizable")]
    NotSymmetrizable,

    #[error("highest weight is not dominant: {0:?}")]
    NotDominant(Vec<i64>),

    #[error("module is not integrable: {0}")]
    NotIntegrable(String),

    #[error("parse error in {field}: {msg}")]
    Parse { field: String, msg: String },

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, msg: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            msg: msg.into(),
        }
    }

    /// True for the errors that signal a configured size or depth cap.
    pub fn is_cap(&self) -> bool {
        matches!(self, Error::SizeCap { .. } | Error::DepthCap { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
