use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("unknown variable `{name}` at column {column}")]
    UnknownVariable { name: String, column: usize },
    #[error("exponent at column {column} is not a nonnegative integer literal")]
    BadExponent { column: usize },
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("inexact division: {0}")]
    InexactDivision(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation on the zero polynomial: {0}")]
    ZeroPolynomial(String),
    #[error("reserved variable `{0}` appears in the input")]
    ReservedVariable(String),
    #[error("Buchberger step limit of {0} exceeded")]
    StepLimit(usize),
    #[error("ideal is not zero-dimensional: {0}")]
    NotZeroDimensional(String),
    #[error("number field error: {0}")]
    NumberField(String),
    #[error("invalid closed point: {0}")]
    InvalidPoint(String),
    #[error("multiplicity of {point} is not divisible by {divisor}")]
    NotDivisible { point: String, divisor: i64 },
    #[error("not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("forms share the common factor {0}")]
    CommonFactor(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
    #[error("invalid family: {0}")]
    InvalidFamily(String),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),
    #[error("not liftable at stage {stage}: {message}")]
    NotLiftable { stage: u32, message: String },
    #[error("certificate search failed: {0}")]
    SearchFailed(String),
    #[error("theorem hypotheses violated upstream: {0}")]
    HypothesisViolated(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
