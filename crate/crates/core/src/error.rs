use thiserror::Error;

/// Every failure the library reports.
///
/// The `Display` strings are part of the command-line contract: the CLI
/// prints them verbatim and scripts match on them.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic 2 is not supported")]
    Characteristic2,
    #[error("{0} is not an odd prime")]
    NotPrime(u64),
    #[error("field mismatch")]
    FieldMismatch,
    #[error("denominator divisible by {0}")]
    DenominatorDivisible(u64),
    #[error("division by zero")]
    DivisionByZero,

    #[error("series not invertible")]
    SeriesNotInvertible,
    #[error("order mismatch")]
    OrderMismatch,
    #[error("truncation order must be positive")]
    ZeroOrder,

    #[error("matrix not symmetric")]
    NotSymmetric,
    #[error("entry degree")]
    EntryDegree,
    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("enumeration requires finite field")]
    InfiniteField,
    #[error("dimension mismatch")]
    DimensionMismatch,

    #[error("trace criterion unreliable")]
    TraceCriterionUnreliable,
    #[error("zero generator")]
    ZeroGenerator,
    #[error("unsupported degeneracy")]
    UnsupportedDegeneracy,

    #[error("zero point")]
    ZeroPoint,
    #[error("not on base locus")]
    NotOnBaseLocus,
    #[error("x is a vertex of this fiber")]
    VertexOfFiber,
    #[error("expected sextic")]
    ExpectedSextic,
    #[error("degree must be positive")]
    NonPositiveDegree,

    #[error("inconsistent polarization data")]
    InconsistentPolarization,
    #[error("inconsistent Chern data")]
    InconsistentChern,
    #[error("inconsistent transform data")]
    InconsistentTransform,
    #[error("below proven bound: inconsistent input")]
    BelowBound,

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Input errors are the caller's fault before any mathematics runs.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
