use thiserror::Error;

/// Errors raised by the algebra routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range 1..={n}")]
    VariableOutOfRange { index: usize, n: usize },

    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,

    #[error("division by the zero polynomial")]
    ZeroDivisor,

    #[error("variable x{0} still occurs in the polynomial")]
    VariableOccurs(usize),

    #[error("polynomial is not homogeneous")]
    Inhomogeneous,

    #[error("expected {expected} elements, got {got}")]
    WrongCount { expected: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid hyperplane pair {i}-{j} for ambient dimension {n}")]
    InvalidHyperplane { i: usize, j: usize, n: usize },

    #[error("hyperplane {i}-{j} is not in the arrangement")]
    MissingHyperplane { i: usize, j: usize },

    #[error("arrangement is not southwest")]
    NotSouthwest,

    #[error("arrangement is not essential")]
    NotEssential,

    #[error("no certified free basis is known for this arrangement")]
    NoCertifiedBasis,

    #[error("basis fails Saito's criterion")]
    NotCertified,

    #[error("sets do not partition 1..={0}")]
    NotAPartition(usize),

    #[error("not a permutation of 1..={0}")]
    NotAPermutation(usize),

    #[error("size guard exceeded: {0}")]
    TooLarge(String),

    #[error("Groebner computation exceeded the term limit of {0}")]
    ResourceLimit(usize),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
