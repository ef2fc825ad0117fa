use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum RunDistError {
    #[error("probability {0} outside [0, 1]")]
    InvalidProbability(f64),
    #[error("success probability {0} is degenerate; need 0 < p < 1")]
    DegenerateProbability(f64),
    #[error(
        "n = {n} exceeds the exact-arithmetic bound {limit}; \
         use the Markov-chain imbedding for large series"
    )]
    ExactBoundExceeded { n: usize, limit: usize },
    #[error("n = {n} exceeds the brute-force enumeration bound {limit}")]
    BruteForceBoundExceeded { n: usize, limit: usize },
    #[error("run length k must be at least 1")]
    ZeroRunLength,
    #[error("run count x = {x} cannot exceed n/k = {max}")]
    RunCountTooLarge { x: usize, max: usize },
    #[error("bandwidth must be positive, got {0}")]
    NonpositiveBandwidth(f64),
}
