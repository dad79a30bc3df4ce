use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("the zero polynomial has no roots to classify")]
    ZeroPolynomial,
    #[error("denominator is the zero polynomial")]
    ZeroDenominator,
    #[error("numerator and denominator share the factor {0}")]
    CommonFactor(String),
    #[error("{which} has a repeated root (shared factor {factor})")]
    RepeatedRoot { which: &'static str, factor: String },
    #[error("pole at x = {0}")]
    Pole(String),
    #[error("expected a polynomial of degree {expected}, got degree {got}")]
    WrongDegree { expected: usize, got: i64 },
    #[error("cannot parse {what}: {reason}")]
    Parse { what: &'static str, reason: String },
    #[error("{family}: {reason}")]
    Domain { family: String, reason: String },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("point {0} is not on the curve")]
    OffCurve(String),
    #[error("no integer-clearing scale up to {0}")]
    NoClearingScale(u64),
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn parse(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Parse { what, reason: reason.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
