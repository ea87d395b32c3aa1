use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A board, algorithm or command configuration is invalid.
    #[error("configuration error: {0}")]
    Config(String),
    /// Malformed caller input, such as a broken cycle or an out-of-range `h`.
    #[error("input error: {0}")]
    Input(String),
    #[error("illegal move: {0}")]
    IllegalMove(String),
    /// A strategy was handed a state outside its reachable set.
    #[error("strategy invariant violated: {0}")]
    Strategy(String),
    #[error("robber policy error: {0}")]
    Policy(String),
    #[error("cone frame cannot place {0} unambiguously")]
    Frame(String),
    /// A bound's hypotheses do not hold for the instance.
    #[error("out of domain: {0}")]
    Domain(String),
    #[error("infeasible deadline: {0}")]
    Infeasible(String),
    #[error("state space of {estimate} exceeds budget {budget}")]
    Budget { estimate: u128, budget: u64 },
    #[error("malformed trace: {0}")]
    Trace(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
