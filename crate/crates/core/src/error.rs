use thiserror::Error;

/// Error type shared by the whole crate.
#[derive(Debug, Error)]
pub enum SbdError {
    /// A line-oriented input (lexicon, tag map, config) failed to parse.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    /// An input vector or weight block has the wrong length.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// A caller violated an operation's contract (empty batch, bad split, ...).
    #[error("contract violation: {0}")]
    Contract(String),

    /// Training produced a non-finite error value.
    #[error("training diverged at epoch {epoch}: non-finite error")]
    Divergence { epoch: usize },

    /// A model file is malformed, truncated, or has an unsupported version.
    #[error("model format error: {0}")]
    ModelFormat(String),

    /// The decisions handed to the evaluator do not line up with the gold
    /// corpus candidates.
    #[error("candidate mismatch at token index {index}: {message}")]
    CandidateMismatch { index: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
