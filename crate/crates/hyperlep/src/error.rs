use thiserror::Error;

/// Errors raised by carrier, table, and derivation operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty operand")]
    EmptyOperand,

    #[error("carrier mismatch: expected size {expected}, found {found}")]
    CarrierMismatch { expected: usize, found: usize },

    #[error("carrier must have at least one element")]
    EmptyCarrier,

    #[error("carrier size {size} exceeds the bitmask bound of {bound}")]
    CarrierTooLarge { size: usize, bound: usize },

    #[error("element name must be non-empty")]
    EmptyName,

    #[error("duplicate element name `{0}`")]
    DuplicateName(String),

    #[error("index {index} out of range for carrier of size {size}")]
    IndexOutOfRange { index: usize, size: usize },

    #[error("empty cell at ({row}, {col}); hyperoperation outputs must be non-empty")]
    EmptyCell { row: usize, col: usize },

    #[error("arity mismatch: operation expects {expected} arguments, got {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("no cell stored for index tuple {0:?}")]
    MissingCell(Vec<usize>),

    #[error("pairing is not an involution: index {0} is inconsistently paired")]
    NonInvolutivePairing(usize),

    #[error("pairing does not cover index {0}")]
    IncompletePairing(usize),

    #[error("unknown particle name `{0}`")]
    UnknownParticle(String),

    #[error("antiparticle relation broken for `{name}`: {reason}")]
    BadAntiparticle { name: String, reason: String },

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("no conserving output for input tuple {0:?}")]
    NoConservingOutput(Vec<String>),

    #[error(
        "carrier size {size} exceeds the exhaustive enumeration bound of {bound}; \
             probe individual seeds with closure_of instead"
    )]
    EnumerationBound { size: usize, bound: usize },

    #[error("subset is not closed under the hyperoperation")]
    NotClosed,
}

pub type Result<T> = std::result::Result<T, Error>;
