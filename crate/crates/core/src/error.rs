use num_bigint::BigInt;
use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter was outside the domain the operation accepts.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("matrix is not invertible over {ring} (det = {det})")]
    SingularMatrix { ring: String, det: BigInt },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A configured work or memory ceiling would be exceeded.
    #[error("budget exceeded: {what} needs {required}, cap is {cap}")]
    BudgetExceeded { what: String, required: u128, cap: u128 },

    /// A coefficient table does not reach the requested prime.
    #[error("coefficient data exhausted: need a_p for p = {p}, table ends at {bound}")]
    DataExhausted { p: u64, bound: u64 },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: u64, msg: String },

    #[error("Deligne bound violated at p = {p}: a_p = {ap}")]
    DeligneViolation { p: u64, ap: BigInt },

    #[error("duplicate entry for p = {0}")]
    DuplicatePrime(u64),

    #[error("index {0} is not prime")]
    NonPrimeIndex(u64),

    #[error("table is missing a_p for p = {0}")]
    MissingPrime(u64),

    /// Factorization stopped before the cofactor was split.
    #[error("partial factorization: cofactor {cofactor} not split within budget")]
    PartialFactorization { cofactor: BigInt },

    /// An identity that must hold did not. Always a bug or a falsified claim.
    #[error("identity violated: {0}")]
    IdentityViolation(String),

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
