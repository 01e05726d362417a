use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative weights are rejected: {0}")]
    NegativeWeight(String),
    #[error("atom `{0}` uses the reserved prefix `q_`")]
    ReservedPrefix(String),
    #[error("inconsistent set of literals: contains both {0} and -{0}")]
    Inconsistent(String),
    #[error("signature has {size} atoms, over the enumeration cap of {cap}")]
    CapExceeded { cap: usize, size: usize },
    #[error("formula contains classical negation; eliminate it first")]
    ClassicalNegation,
    #[error("program is not nonnested")]
    NotNonnested,
    #[error("program is not tight; its completion is not guaranteed to characterize its answer sets")]
    NotTight,
    #[error("non-integer weight in constraint: {0}")]
    NonIntegerWeight(String),
    #[error("constraint of length {length} exceeds the limit of {limit} for this translation")]
    ConstraintTooLong { length: usize, limit: usize },
    #[error("simplified rule is not strongly equivalent to its raw form: {0}")]
    SimplificationMismatch(String),
    #[error("answer-set solvers disagree: {0}")]
    SolverMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
