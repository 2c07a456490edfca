use thiserror::Error;

/// Errors raised across the crate.
///
/// Variants are grouped by how a caller is expected to react: malformed
/// input, unmet size hypotheses, search limits, and numerical ties.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid arity: k = {0}, need k >= 3")]
    InvalidArity(usize),

    #[error("invalid set: {0}")]
    InvalidSet(String),

    #[error("invalid witness: {0}")]
    InvalidWitness(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("structure not found: {0}")]
    StructureNotFound(String),

    #[error("branch guarantee failed: {0}")]
    BranchGuaranteeFailed(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("precision indeterminate: {0}")]
    PrecisionIndeterminate(String),

    /// A builder produced a tuple that failed verification. Always a bug.
    #[error("construction produced an invalid witness: {0}")]
    InvalidConstruction(String),
}

impl Error {
    /// Stable machine-readable tag used in JSON error objects.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidArity(_) => "invalid-arity",
            Error::InvalidSet(_) => "invalid-set",
            Error::InvalidWitness(_) => "invalid-witness",
            Error::HypothesisViolation(_) => "hypothesis-violation",
            Error::PreconditionViolation(_) => "precondition-violation",
            Error::StructureNotFound(_) => "structure-not-found",
            Error::BranchGuaranteeFailed(_) => "branch-guarantee-failed",
            Error::DegenerateInput(_) => "degenerate-input",
            Error::Domain(_) => "domain-error",
            Error::OutOfRange(_) => "out-of-range",
            Error::BudgetExceeded(_) => "budget-exceeded",
            Error::PrecisionIndeterminate(_) => "precision-indeterminate",
            Error::InvalidConstruction(_) => "invalid-construction",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
