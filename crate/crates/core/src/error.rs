use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("no nonempty facets given")]
    EmptyInput,
    #[error("vertex {vertex} outside the ground set [1..{n}]")]
    VertexOutOfRange { vertex: u32, n: u32 },
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("cohomological index {index} outside [0, {max}]")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("no linear system of parameters found over GF({p}) after {attempts} attempts")]
    LsopNotFound { p: u32, attempts: usize },
    #[error("hypothesis failed: {0}")]
    HypothesisFailed(String),
    #[error("vector length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },
    #[error("no binomial expansion of b = {b} for n = {n}, d = {d}")]
    ExpansionImpossible { b: i64, n: i64, d: i64 },
    #[error("top Betti number is zero")]
    BettiZero,
    #[error("unknown builtin complex `{0}`")]
    UnknownBuiltin(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}
