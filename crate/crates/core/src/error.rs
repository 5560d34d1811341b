use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("undefined relation: neutral letter N{0} compared with itself")]
    UndefinedRelation(f64),

    #[error("invalid Thoma parameters: {0}")]
    InvalidThoma(String),

    #[error("neutral letter N{0} occurs more than once")]
    DuplicateNeutral(f64),

    #[error("invalid tableau at box ({x}, {y}): {reason}")]
    InvalidTableau { x: usize, y: usize, reason: String },

    #[error("invalid tableau: {0}")]
    MalformedTableau(String),

    #[error("diagrams at steps {step} and {} are not adjacent in the Young graph", step + 1)]
    NonAdjacentPath { step: usize },

    #[error("operation requires a nonempty tableau")]
    EmptyTableau,

    #[error("requested {requested} jeu de taquin steps on a tableau with {available} boxes")]
    TooManySteps { requested: usize, available: usize },

    #[error("oracle bound exceeded: word of length {len} exceeds bound {bound}")]
    OracleBoundExceeded { len: usize, bound: usize },

    #[error("Greene oracle inconsistency: row sums give {rows:?}, column sums give {columns:?}")]
    GreeneMismatch {
        rows: Vec<usize>,
        columns: Vec<usize>,
    },

    #[error("{what}: argument {value} outside domain")]
    Domain { what: &'static str, value: f64 },

    #[error("prefix too short to classify: n = {n}, minimum {min}")]
    PrefixTooShort { n: usize, min: usize },

    #[error("letter at position {position} is not a row letter in 1..={max}")]
    NotARowLetter { position: usize, max: usize },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
