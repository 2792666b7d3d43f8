use thiserror::Error;

/// Error kinds surfaced by the library. Every fallible operation reports one
/// of these; the CLI maps them to nonzero exit codes.
#[derive(Debug, Error)]
pub enum DevoidError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unsupported pattern: {0}")]
    UnsupportedPattern(String),
    #[error("too large: {0}")]
    TooLarge(String),
    #[error("not a forest: {0}")]
    NotAForest(String),
    #[error("invalid face: {0}")]
    InvalidFace(String),
    #[error("invalid pivot: {0}")]
    InvalidPivot(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("certificate unavailable: {0}")]
    CertificateUnavailable(String),
    #[error("strategy incomplete: {0}")]
    StrategyIncomplete(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("internal invariant violation: {0}")]
    InternalInvariant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
