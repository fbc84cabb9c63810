use thiserror::Error;

/// Errors raised by the library.
///
/// Ground-set elements are reported 1-based (`E_t = {1, .., t}`); positions in
/// an input sequence or along a cycle are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("entry at position {0} is not -1 or +1")]
    BadEntry(usize),
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("elements {0} and {1} are parallel or antiparallel")]
    NotSimple(usize, usize),
    #[error("the all-positive system is infeasible")]
    NotAcyclic,
    #[error("element {0} is a loop (zero vector)")]
    Loop(usize),
    #[error("ground set of size {0} is too small for symmetric cycles")]
    DegenerateGroundSet(usize),
    #[error("ground set of size {0} exceeds the supported maximum of {1}")]
    TooLarge(usize, usize),
    #[error("no symmetric cycle found")]
    NoCycleFound,
    #[error("invalid symmetric cycle: {0}")]
    InvalidCycle(String),
    #[error("committee sum certificate failed: members sum to {sum:?}, expected {expected:?}")]
    CertificateFailure { sum: Vec<i64>, expected: Vec<i64> },
    #[error("poset minima {poset:?} disagree with rank local minima {local:?}")]
    MinimaMismatch {
        poset: Vec<usize>,
        local: Vec<usize>,
    },
    #[error("coefficient {value} at basis position {position} is not in {{-1, 0, 1}}")]
    NonTernaryCoefficient { position: usize, value: String },
    #[error("the first t cycle vertices are linearly dependent")]
    SingularBasis,
    #[error("vector length {0} is not a positive even number")]
    BadLength(usize),
    #[error("{0} did not evaluate to a nonnegative integer")]
    NonIntegerResult(String),
    #[error("invalid distance vector: {0}")]
    InvalidDistanceVector(String),
    #[error("tope set is not closed under negation")]
    NotNegationClosed,
    #[error("halfspace selector is invalid: {0}")]
    BadSelector(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::LengthMismatch { expected, found })
    }
}
