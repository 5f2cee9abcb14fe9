use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NonPrime(u32),
    #[error("operation requires an odd prime, got {0}")]
    NonOddPrime(u32),
    #[error("invalid characteristic {0}")]
    InvalidCharacteristic(u32),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("partition sizes differ ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("partition {0} is not {1}-regular")]
    NotPRegular(String, u32),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("modules have different degrees ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("modules are defined over different fields (p={0} vs p={1})")]
    FieldMismatch(u32, u32),
    #[error("semisimple quotient does not split over GF({0})")]
    SplitFailure(u32),
    #[error("element is not idempotent")]
    NotIdempotent,
    #[error("unknown name {0:?}")]
    UnknownName(String),
    #[error("invalid assignment: {0}")]
    InvalidAssignment(String),
    #[error("algebra has no grading")]
    Ungraded,
    #[error("grading is incompatible with the action")]
    IncompatibleGrading,
    #[error("module is not indecomposable")]
    NotIndecomposable,
    #[error("partition {0} is not a {1}-core")]
    NotACore(String, u32),
    #[error("shape {0} does not fit the weight lattice")]
    ShapeOverflow(String),
    #[error("computation exceeds budget: {0}")]
    BudgetExceeded(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
