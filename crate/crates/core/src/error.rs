use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial division leaves a nonzero remainder: {0}")]
    NonExactDivision(String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("defect {defect} is not admissible for family {family}")]
    WrongDefectParity { defect: usize, family: String },
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("enumeration of {size} vectors exceeds the budget of {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("character sum is not rational: {0}")]
    NonRationalSum(String),
    #[error("vectors do not form a singular orthogonal pair: {0}")]
    BadPair(String),
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("identity failed: {0}")]
    IdentityFailed(String),
    #[error("parse error: {0}")]
    Parse(String),
}
