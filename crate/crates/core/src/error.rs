use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("field tag mismatch: cannot combine {0} with {1}")]
    TagMismatch(&'static str, &'static str),
    #[error("division by zero")]
    DivisionByZero,
    #[error("matrix is {0}x{1}, determinant needs a square matrix")]
    NonSquare(usize, usize),
    #[error("series shapes differ: {0}")]
    DegreeMismatch(String),
    #[error("series has zero constant term and cannot be inverted")]
    NonInvertibleConstantTerm,
    #[error("size {size} exceeds cap {cap} (raise VERTEXLAB_CAP to override)")]
    SizeTooLarge { size: usize, cap: usize },
    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid height function: {0}")]
    InvalidHeight(String),
    #[error("invalid alternating sign matrix: {0}")]
    InvalidAsm(String),
    #[error("invalid monotone triangle: {0}")]
    InvalidTriangle(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("zero matrix entry at ({0}, {1}) sits under a -1 of some ASM")]
    ZeroEntryAtMinusOne(usize, usize),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("repeated variable at positions {0} and {1}")]
    RepeatedVariable(usize, usize),
    #[error("width {p} too small, need at least {need}")]
    WidthTooSmall { p: usize, need: usize },
    #[error("series truncated at degree {have}, need {need}")]
    TruncationTooSmall { have: u32, need: u32 },
    #[error("partition {0} does not fit a {1}x{2} box")]
    DoesNotFitBox(String, usize, usize),
    #[error("total size {size} exceeds oracle cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
