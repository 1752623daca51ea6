use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("arity must be between 2 and 36, got {0}")]
    InvalidArity(u32),
    #[error("digit out of range in codeword {word:?} for arity {arity}")]
    DigitOutOfRange { word: String, arity: usize },
    #[error("duplicate codeword {0:?}")]
    DuplicateCodeword(String),
    #[error("words do not form a prefix code")]
    NotPrefixFree,
    #[error("inner tree arity {inner} does not match outer arity {outer}")]
    ArityMismatch { outer: usize, inner: usize },
    #[error("need at least {min} items, got {got}")]
    TooFewItems { min: usize, got: usize },
    #[error("combine size {k} exceeds {available} available items")]
    CombineTooLarge { k: usize, available: usize },
    #[error("weight {0} is outside the weighting's domain")]
    InvalidWeight(String),
    #[error("instance size {n} outside supported range {min}..={max}")]
    SizeOutOfRange { n: usize, min: usize, max: usize },
    #[error("symbol 0x{0:02x} has no codeword")]
    MissingSymbol(u8),
    #[error("codec requires a binary code table, got arity {0}")]
    NonBinaryCodec(usize),
    #[error("bitstream truncated after {decoded} of {expected} symbols")]
    Truncated { decoded: usize, expected: usize },
    #[error("bitstream contains an undecodable sequence at bit {0}")]
    Undecodable(u64),
    #[error("invalid container: {0}")]
    Container(String),
    #[error("duplicate node id {0:?}")]
    DuplicateId(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
