use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u64),
    #[error("field size {0} exceeds the 2^16 desk-scale guard")]
    SizeExceeded(u64),
    #[error("inverse of zero in a finite field")]
    DivisionByZero,
    #[error("operation requires characteristic 2 with odd extension degree")]
    WrongCharacteristic,
    #[error("generated group order exceeds cap of {cap}")]
    OrderCapExceeded { cap: usize },
    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),
    #[error("malformed partition/claim: {0}")]
    MalformedClaim(String),
    #[error("group has trivial center")]
    CenterTrivial,
    #[error("group has even order")]
    EvenOrder,
    #[error("anchor mismatch: {0}")]
    AnchorMismatch(String),
    #[error("partition invariant broken: {0}")]
    InvariantBroken(String),
    #[error("elements do not all commute: {0}")]
    NotCommuting(String),
    #[error("quotient too large for structural classification")]
    QuotientTooLarge,
    #[error("invalid family parameters: {0}")]
    InvalidParams(String),
    #[error("no closed form for this family instance: {0}")]
    UnsupportedFamily(String),
    #[error("group is not an AC-group")]
    NotACGroup,
    #[error("AC partition needs all centralizers of size >= 3 (found {0})")]
    CentralizerTooSmall(usize),
    #[error("group is not a Frobenius group")]
    NotFrobenius,
    #[error("Frobenius complement has order 2; group is NAP, not AP")]
    ComplementTooSmall,
    #[error("direct-product factors must have even order")]
    FactorOddOrder,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Other(String),
}

pub type Result<T> = std::result::Result<T, Error>;
