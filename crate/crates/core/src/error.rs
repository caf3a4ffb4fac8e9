use crate::Rational;

/// Errors raised by field construction, arithmetic and the verification suites.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid modulus: {0}")]
    InvalidModulus(String),

    #[error("elements belong to different fields")]
    FieldMismatch,

    #[error("element is zero to precision {precision}; cannot {op}")]
    ZeroToPrecision { precision: Rational, op: &'static str },

    #[error("element is not a unit (valuation {valuation})")]
    NotUnit { valuation: Rational },

    #[error("element is not integral (valuation {valuation})")]
    NotIntegral { valuation: Rational },

    #[error("precision shortfall: need ord_p precision {required}, field carries {available}")]
    PrecisionShortfall { required: Rational, available: Rational },

    #[error("series composition needs an inner series with zero constant term")]
    NonzeroConstantTerm,

    #[error("linear coefficient is not invertible")]
    NonInvertibleLinearTerm,

    #[error("cannot invert {0}")]
    NotInvertible(String),

    #[error("Newton polygon needs at least one finite point")]
    EmptyNewtonPolygon,

    #[error("invalid Frobenius series: {0}")]
    InvalidFrobenius(String),

    #[error("invalid prime element: {0}")]
    InvalidPrimeElement(String),

    #[error("degree {degree} exceeds the supported bound {limit}")]
    DegreeOverflow { degree: usize, limit: usize },

    #[error("requested degree {requested} exceeds cap {cap}")]
    CapExceeded { requested: usize, cap: usize },

    #[error("coefficient tensor is incomplete: truncation {available} < order {required}")]
    IncompleteTensor { required: usize, available: usize },

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("valuation profile is not eventually linear")]
    NotEventuallyLinear,

    #[error("exponent {n} is not congruent to {i} modulo {modulus}")]
    ResidueMismatch { n: i64, i: i64, modulus: u64 },

    #[error("operation needs the base field Q_p: {0}")]
    RequiresBaseField(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;
