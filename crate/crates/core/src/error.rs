use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operand shapes do not fit the operation.
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// Input violates a documented precondition.
    Contract(String),
    UnknownConstruction(String),
    /// The code is not self-dual, so two-information-set enumeration is invalid.
    NotSelfDual,
    NotExtremal {
        min_distance: u32,
    },
    /// Counted weights fit none of the known enumerator families.
    InconsistentEnumerator {
        a12: u64,
        a14: u64,
    },
    InvalidCandidate(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { op, left, right } => {
                write!(f, "{op}: dimension mismatch {}x{} vs {}x{}", left.0, left.1, right.0, right.1)
            }
            Error::Contract(msg) => write!(f, "contract violation: {msg}"),
            Error::UnknownConstruction(id) => write!(f, "unknown construction `{id}`"),
            Error::NotSelfDual => f.write_str("code is not self-dual"),
            Error::NotExtremal { min_distance } => {
                write!(f, "code is not a [72,36,12] code (minimum distance {min_distance})")
            }
            Error::InconsistentEnumerator { a12, a14 } => {
                write!(f, "weight counts A12={a12}, A14={a14} fit no [72,36,12] enumerator family")
            }
            Error::InvalidCandidate(msg) => write!(f, "invalid candidate: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
