use thiserror::Error;

use crate::decompose::Part;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient ring must have at least one variable")]
    NoVariables,

    #[error("homological degree {index} exceeds the number of variables {vars}")]
    ColumnOutOfRange { index: usize, vars: usize },

    #[error("tables live over different rings ({left} vs {right} variables)")]
    VarsMismatch { left: usize, right: usize },

    #[error("entry ({i}, {j}) would become negative")]
    NegativeEntry { i: usize, j: i64 },

    #[error("degree sequence must be nonempty and strictly increasing: {0:?}")]
    InvalidSequence(Vec<i64>),

    #[error("degree sequence of length {len} needs more than {vars} variables")]
    TooLong { len: usize, vars: usize },

    #[error("table is empty")]
    EmptyTable,

    #[error("nonzero columns are not contiguous from 0 (missing column {0})")]
    ColumnGap(usize),

    #[error("minimal shifts are not strictly increasing at column {0}")]
    NotIncreasing(usize),

    #[error("table is not in the Boij-Soderberg cone after {} parts: {cause}", .partial.len())]
    NotInCone { cause: Box<Error>, partial: Vec<Part> },

    #[error("bad chain: {0}")]
    BadChain(String),

    #[error("table is not generated in degree zero")]
    NotDegreeZero,

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Domain errors are the ones a caller can trigger with well-formed input.
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::Parse(_))
    }
}
