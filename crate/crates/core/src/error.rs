use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inverse requested for a matrix of deficient rank.
    SingularMatrix { dimension: usize, rank: usize },
    /// Shapes do not fit the operation.
    DimensionMismatch { expected: (usize, usize), found: (usize, usize) },
    /// A closed form was asked for outside the cases it covers.
    Unsupported(String),
    /// An input violated an operation's precondition.
    Contract(String),
    /// A word-level result could not be written in the sum-odd basis.
    NotInSumOddSpan(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SingularMatrix { dimension, rank } => {
                write!(f, "singular matrix: rank {rank} < dimension {dimension}")
            }
            Error::DimensionMismatch { expected, found } => write!(
                f,
                "dimension mismatch: expected {}x{}, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Error::Unsupported(msg) => write!(f, "unsupported case: {msg}"),
            Error::Contract(msg) => write!(f, "contract violation: {msg}"),
            Error::NotInSumOddSpan(msg) => write!(f, "not in the sum-odd span: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
