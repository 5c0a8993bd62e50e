use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("payoff matrices differ in shape: {0}x{1} vs {2}x{3}")]
    ShapeMismatch(usize, usize, usize, usize),
    #[error("game has no actions for at least one player")]
    EmptyGame,
    #[error("matrix rows have unequal lengths")]
    RaggedMatrix,
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },
    #[error("mixing weight {0} outside [0, 1]")]
    WeightOutOfRange(String),
    #[error("not a probability vector: {0}")]
    InvalidStrategy(String),
    #[error("affine scale must be positive, got {0}")]
    AlphaNonpositive(String),
    #[error("game is not zero-sum at cell ({0}, {1})")]
    NotZeroSum(usize, usize),
    #[error("game is {rows}x{cols}, enumeration limit is {max}")]
    TooLarge { rows: usize, cols: usize, max: usize },
    #[error("bad generator spec: {0}")]
    BadSpec(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("internal check failed: {0}")]
    Internal(String),
}
