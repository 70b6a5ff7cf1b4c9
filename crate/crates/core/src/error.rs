use thiserror::Error;

use crate::exactmath::Rational;

/// Every failure the library can report. Each variant has a stable string code
/// (see [`Error::code`]) that the command-line front end emits verbatim.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degree must be at least 1, got {0}")]
    InvalidDegree(i64),
    #[error("rank must be at least {min}, got {rank}")]
    InvalidRank { rank: i64, min: i64 },
    #[error("surface violates Noether's formula: 12(1 + p_g - q) = {lhs} but K^2 + c2 = {rhs}")]
    NoetherViolation { lhs: i64, rhs: i64 },
    #[error("no h0 value available for the class {l_mult}L + {k_mult}K")]
    MissingH0Evaluator { l_mult: i64, k_mult: i64 },
    #[error(
        "margin polynomial for rank {rank} has non-positive leading coefficient {leading} \
         (next coefficient {subleading}); no threshold exists"
    )]
    NoGoodD0 {
        rank: i64,
        leading: Box<Rational>,
        subleading: Box<Rational>,
    },
    #[error("Cauchy bound {bound} exceeds the scan cap {cap}")]
    ScanCapExceeded { bound: i64, cap: i64 },
    #[error("required cycle length is negative ({0}); the target c2 is unreachable")]
    NegativeCycleLength(i64),
    #[error("hypersurface has no defining polynomial")]
    MissingDefiningPolynomial,
    #[error("point {0} does not lie on the hypersurface")]
    PointOffSurface(String),
    #[error("cycle contains the point {0} more than once")]
    DuplicatePoints(String),
    #[error("expected {expected} cycles, got {got}")]
    WrongCycleCount { expected: usize, got: usize },
    #[error("degenerate deformation: {0}")]
    DegenerateDeformation(String),
    #[error("quotient basis has no unique top-degree monomial")]
    NoUniqueTopMonomial,
    #[error("division by zero")]
    DivisionByZero,
}

impl Error {
    /// Stable machine-readable identifier for the error kind.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RingMismatch(_) => "RingMismatch",
            Error::Parse(_) => "ParseError",
            Error::InvalidInput(_) => "InvalidInput",
            Error::InvalidDegree(_) => "InvalidDegree",
            Error::InvalidRank { .. } => "InvalidRank",
            Error::NoetherViolation { .. } => "NoetherViolation",
            Error::MissingH0Evaluator { .. } => "MissingH0Evaluator",
            Error::NoGoodD0 { .. } => "NoGoodD0",
            Error::ScanCapExceeded { .. } => "ScanCapExceeded",
            Error::NegativeCycleLength(_) => "NegativeCycleLength",
            Error::MissingDefiningPolynomial => "MissingDefiningPolynomial",
            Error::PointOffSurface(_) => "PointOffSurface",
            Error::DuplicatePoints(_) => "DuplicatePoints",
            Error::WrongCycleCount { .. } => "WrongCycleCount",
            Error::DegenerateDeformation(_) => "DegenerateDeformation",
            Error::NoUniqueTopMonomial => "NoUniqueTopMonomial",
            Error::DivisionByZero => "DivisionByZero",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
