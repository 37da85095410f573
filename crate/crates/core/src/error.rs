use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("leading coefficient must be nonzero")]
    ZeroLeadingCoefficient,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a nonconstant polynomial")]
    ConstantPolynomial,
    #[error("Dickson parameter must be nonzero")]
    ZeroDelta,
    #[error("degrees {0} and {1} are not coprime")]
    NotCoprime(u32, u32),
    #[error("constraint violated: {0}")]
    ConstraintViolated(String),
    #[error("{0} exceeds the trial-division bound")]
    FactorizationOverflow(u64),
    #[error("bad modulus class: {0}")]
    BadModulusClass(String),
    #[error("no decomposition: {0}")]
    NoDecomposition(String),
    #[error("not simple-rational-rooted: {0}")]
    NotSimpleRooted(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("factorization roots collide")]
    DegenerateRoots,
    #[error("parameter b vanishes")]
    ZeroB,
    #[error("representations give different b: {0}")]
    MismatchedB(String),
    #[error("search bound {0} exceeds the allowed maximum")]
    SearchBoundExceeded(u64),
    #[error("no fundamental unit found for D = {0} within the scan bound")]
    FundamentalSearchOverflow(u64),
    #[error("sequence element {index} is off the curve")]
    OffCurve { index: usize },
    #[error("polynomial has {0} roots of odd multiplicity (at most two allowed)")]
    OddMultiplicityViolation(usize),
    #[error("solution source invalid: {0}")]
    SolutionSourceInvalid(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("({0}) is not on the cone 3a^2 + b^2 = c^2")]
    NotOnCone(String),
    #[error("resource bound exceeded: {0}")]
    ResourceBoundExceeded(String),
    #[error("unknown example id {0:?}")]
    UnknownExampleId(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
