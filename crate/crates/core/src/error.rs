use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("polynomials live in different variable sets")]
    VariableMismatch,
    #[error("rewrite rule with lead `{lead}` does not decrease: replacement contains `{term}`")]
    NonDecreasingRule { lead: String, term: String },
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("malformed descriptor: {0}")]
    Descriptor(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("bounds exceeded: {0}")]
    BoundsExceeded(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("no consistent sign choice: {0}")]
    SignSelection(String),
}
