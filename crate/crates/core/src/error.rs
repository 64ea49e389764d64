use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is reducible")]
    Reducible(String),
    #[error("no primitive element found for order {0} (order exceeds the exhaustive-check bound or field is invalid)")]
    NoPrimitiveFound(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("zero element has no discrete logarithm")]
    ZeroElement,
    #[error("generator rows span the zero code")]
    RankZero,
    #[error("vector length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("explicit code contains duplicate codewords")]
    DuplicateCodeword,
    #[error("enumeration budget exceeded in {stage}: needs {needed}, budget {budget}")]
    BudgetExceeded {
        stage: &'static str,
        needed: u128,
        budget: u64,
    },
    #[error("support-search budget exceeded: needs {needed}, budget {budget}")]
    SearchBudgetExceeded { needed: u128, budget: u64 },
    #[error("claimed subcode is not contained in the parent code")]
    NotASubcode,
    #[error("invalid overlap: s = {s} must satisfy 0 <= s < d = {d}")]
    InvalidOverlap { s: usize, d: usize },
    #[error("degenerate closed chain: row weight {d} >= length {n}, a row wraps onto itself")]
    DegenerateClosed { d: usize, n: usize },
    #[error("overlap s = {s} violates the bound s <= {bound}")]
    OverlapBoundViolated { s: usize, bound: usize },
    #[error("input code violates the required conditions: {0}")]
    ConditionsViolated(String),
    #[error("postcondition failed (implementation bug): {0}")]
    PostconditionFailed(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error("feasibility report does not admit an encoding")]
    InfeasibleReport,
    #[error("structured encoding path unavailable: {0}")]
    StructuredPathUnavailable(String),
    #[error("decoding is ambiguous at the decision radius")]
    Ambiguous,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Process exit code contract: 1 verification failure, 2 input error,
    /// 3 budget exceeded.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::BudgetExceeded { .. } | Error::SearchBudgetExceeded { .. } => 3,
            Error::ConditionsViolated(_)
            | Error::PostconditionFailed(_)
            | Error::InfeasibleReport
            | Error::Ambiguous => 1,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
