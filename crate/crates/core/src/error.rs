use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("shape mismatch: {left:?} vs {right:?}")]
    ShapeMismatch {
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("basis vector {index} of the smaller space is not contained in the larger one")]
    SubspaceNotContained { index: usize },

    #[error("algebra `{0}` is not left pre-Jacobi-Jordan")]
    NotPreJJ(String),

    #[error("algebra `{0}` is not Jacobi-Jordan")]
    NotJJ(String),

    #[error("algebra `{0}` is not commutative and associative")]
    NotCommAssoc(String),

    #[error("the map is not an algebra morphism: {0}")]
    NotMorphism(String),

    #[error("not a representation: {0}")]
    NotRepresentation(String),

    #[error("mu(e{0})mu(e{1}) != mu(e{1})mu(e{0}); the dual construction needs commuting mu")]
    HypothesisHpViolated(usize, usize),

    #[error("the operator is not a Nijenhuis operator: {0}")]
    NotNijenhuis(String),

    #[error("the cochain does not generate a linear deformation: {0}")]
    NotGenerating(String),

    #[error("the operator does not satisfy N^2 = 0")]
    PreconditionNotNilpotent,

    #[error("the operator does not satisfy N^2 = N")]
    PreconditionNotIdempotent,

    #[error("subspace not an ideal: {0}")]
    NotIdeal(String),

    #[error("bracket closure failed: {0}")]
    MembershipFailed(String),

    #[error("anticommutator condition disagrees with direct membership: {0}")]
    ConditionMembershipMismatch(String),

    /// A structural identity that must always hold did not hold; indicates a bug.
    #[error("internal contract violated: {0}")]
    ContractViolated(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: duplicate entry")]
    DuplicateEntry { line: usize },

    #[error("line {line}: index out of range")]
    IndexOutOfRange { line: usize },

    #[error("line {line}: zero denominator")]
    ZeroDenominator { line: usize },

    #[error("{0}")]
    Io(String),

    #[error("{0}")]
    Usage(String),
}

impl Error {
    /// True when the error reports that a checked mathematical property is
    /// false, as opposed to malformed input or a usage problem.
    pub fn is_property_failure(&self) -> bool {
        matches!(
            self,
            Error::NotPreJJ(_)
                | Error::NotJJ(_)
                | Error::NotCommAssoc(_)
                | Error::NotMorphism(_)
                | Error::NotRepresentation(_)
                | Error::HypothesisHpViolated(..)
                | Error::NotNijenhuis(_)
                | Error::NotGenerating(_)
                | Error::PreconditionNotNilpotent
                | Error::PreconditionNotIdempotent
                | Error::NotIdeal(_)
                | Error::MembershipFailed(_)
                | Error::ConditionMembershipMismatch(_)
                | Error::ContractViolated(_)
                | Error::SubspaceNotContained { .. }
        )
    }
}
