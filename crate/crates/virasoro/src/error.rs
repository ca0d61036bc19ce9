use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("coefficient requested at q^{exponent} beyond truncation order q^{order}")]
    BeyondTruncation { exponent: String, order: String },
    #[error("series exponents {0} and {1} differ by a non-integer")]
    IncompatibleGrading(String, String),
    #[error("degenerate family: determinant vanishes identically at level {level}")]
    DegenerateFamily { level: usize },
    #[error("norm vanishes identically along the path")]
    IdenticallyZeroNorm,
    #[error("path is not polynomial in x: {0}")]
    NonPolynomialPath(String),
    #[error("structural failure: {0}")]
    Structural(String),
    #[error("grading violation: {0}")]
    Grading(String),
    #[error("truncation: state of energy {energy} exceeds E_max = {e_max}; rerun with E_max >= {energy}")]
    Truncation { energy: String, e_max: String },
}

pub type Result<T> = std::result::Result<T, Error>;
