use thiserror::Error;

/// Errors raised by the analysis and codec routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count {0} outside supported range 1..=24")]
    BadVariableCount(usize),
    #[error("truth table has {got} bits, expected {expected}")]
    BadTableLength { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("values are not the Walsh spectrum of a Boolean function")]
    NotBooleanSpectrum,
    #[error("function is not bent")]
    NotBent,
    #[error("function is not plateaued")]
    NotPlateaued,
    #[error("function is not {expected}-plateaued")]
    WrongPlateauOrder { expected: u32 },
    #[error("coordinate {coord} out of range for n={n}")]
    BadCoordinate { coord: usize, n: usize },
    #[error("derivative direction must be nonzero")]
    ZeroDirection,
    #[error("matrix is singular over GF(2)")]
    SingularMatrix,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("no normalizing transform found within {attempts} attempts")]
    SearchExhausted { attempts: usize },
    #[error("face histogram region is empty")]
    EmptyRegion,
    #[error("subset index out of range")]
    IndexOutOfRange,
    #[error("spectrum restricted to face is not plateaued")]
    NotPlateauedOnFace,
    #[error("face sum {0} not in {{0, +-2, +-4}}")]
    SumMismatch(i64),
    #[error("malformed stream: {0}")]
    MalformedStream(String),
    #[error("radius {r} out of range for n={n}")]
    BadRadius { n: usize, r: usize },
    #[error("argument out of range: {0}")]
    OutOfRange(String),
    #[error("n={n}, s={s}: parity requirement violated")]
    ParityMismatch { n: usize, s: usize },
    #[error("exhaustive enumeration limited to n <= 4, got {0}")]
    TooLarge(usize),
    #[error("map is not a bijection")]
    NotBijective,
    #[error("spectrum scalar too narrow for n={0}")]
    Overflow(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
