use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty partition string")]
    EmptyInput,
    #[error("invalid token `{0}`")]
    InvalidToken(String),
    #[error("parts must be positive")]
    ZeroPart,
    #[error("parts must be non-increasing: {0}")]
    NotMonotone(String),
    #[error("({inner}) is not contained in ({outer})")]
    NotContained { outer: String, inner: String },
    #[error("index h = {h} exceeds l = {l}")]
    IndexOutOfRange { h: u32, l: u32 },
    #[error("{cells} cells exceed the enumeration cap of {cap}")]
    CapExceeded { cells: usize, cap: usize },
    #[error("size mismatch: |mu| = {expected}, got {actual}")]
    SizeMismatch { expected: usize, actual: usize },
    #[error("first row of ({mu}) is shorter than m = {m}")]
    FirstRowTooShort { mu: String, m: usize },
    #[error("n = {n} is too small, need n >= {min}")]
    TooSmall { n: usize, min: usize },
    #[error("m = {m} out of range 1..={n}")]
    MOutOfRange { m: usize, n: usize },
    #[error("no closed form for m = {0}")]
    NoClosedForm(usize),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("unsupported cycle type ({0})")]
    UnsupportedSupport(String),
}
