use alloc::string::String;

/// Errors produced by the core arithmetic.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid arity {arity} for {family}")]
    InvalidArity { family: &'static str, arity: u32 },
    #[error("signature mismatch")]
    SignatureMismatch,
    #[error("word {word:?} is not valid for this signature")]
    InvalidWord { word: String },
    #[error("words are not pairwise incomparable")]
    NotAntichain,
    #[error("words do not form a basis")]
    NotBasis,
    #[error("rules do not define a bijection between two bases")]
    InvalidRules,
    #[error("index {index} is out of range for {digits} digits")]
    IndexOutOfRange { index: u64, digits: u32 },
    #[error("digit length {k} is too small for a {d}-cycle")]
    LengthTooSmall { d: u64, k: u32 },
    #[error("operation requires a Higman signature")]
    NotHigman,
    #[error("operation requires an odd arity")]
    EvenArity,
    #[error("element is trivial")]
    Trivial,
    #[error("no fixed word of depth {depth}")]
    NoFixedWord { depth: u32 },
    #[error("element is odd and does not belong to the derived subgroup")]
    FlavorMismatch,
    #[error("word {word:?} is outside cylinder {cylinder:?}")]
    OutsideCylinder { word: String, cylinder: String },
    #[error("degree {degree} exceeds the configured cap {cap}")]
    DegreeTooLarge { degree: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(&'static str),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
