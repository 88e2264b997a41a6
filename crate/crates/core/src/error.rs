use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd(0, 0) is undefined")]
    BothZero,

    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(i64),

    #[error("{value} is not invertible modulo {modulus}")]
    NotInvertible { value: i64, modulus: i64 },

    #[error("residues have different moduli ({0} and {1})")]
    ModulusMismatch(i64, i64),

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("|n| = {0} is too small for the Γ-normalization (need |n| ≥ 2)")]
    DegenerateModulus(i64),

    #[error("({0}, {1}) are not coprime")]
    NotCoprime(i64, i64),

    #[error("cable parameters degenerate: s = {s} divides r = {r}")]
    DegenerateCable { r: i64, s: i64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("braid word has a negative letter; closure is not a positive braid")]
    NonPositiveWord,

    #[error("braid closure has {0} components, expected a knot")]
    DisconnectedClosure(usize),

    #[error("front wraps {wraps} times but the modulus is only {modulus}")]
    WrapsExceedModulus { wraps: i64, modulus: i64 },

    #[error("invalid range: {0}")]
    InvalidRange(String),

    #[error("{0} is not a candidate class of this record")]
    NotACandidate(i64),

    #[error("record invariant violated: {0}")]
    RecordInvariant(String),

    #[error("malformed record line: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
