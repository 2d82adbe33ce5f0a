use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CsmError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("unsupported divisor shape: {0}")]
    UnsupportedDivisor(String),
    #[error("substitution makes denominator factor ({0}) vanish")]
    Pole(String),
    #[error("index {index} out of range {lo}..={hi}")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },
    #[error("variable {var} is outside the ambient (k = {k}, n = {n})")]
    VariableOutOfAmbient { var: String, k: usize, n: usize },
    #[error("invalid window: {0}")]
    InvalidWindow(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid cocharacter: {0}")]
    InvalidCocharacter(String),
    #[error("ambient mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
    #[error("size guard: {what} = {got} exceeds the limit {limit}")]
    SizeGuard {
        what: &'static str,
        got: usize,
        limit: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("no reading permutation: {0}")]
    NoReadingPermutation(String),
    #[error("recursion left a pole: {0}")]
    ResidualPole(String),
    #[error("inconsistent recursion: {0}")]
    Inconsistent(String),
    #[error("unknown verification suite `{0}`")]
    UnknownSuite(String),
}

pub type Result<T> = std::result::Result<T, CsmError>;
