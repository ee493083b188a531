use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    #[error("eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off_norm:e})")]
    ConvergenceFailure { sweeps: usize, off_norm: f64 },

    #[error("power iteration did not converge after {0} iterations")]
    PowerIterationFailure(usize),

    #[error("column lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },

    #[error("at least 2 samples are required, got {0}")]
    TooFewSamples(usize),

    #[error("empty input")]
    EmptyInput,

    #[error("invalid sweep configuration: {0}")]
    ConfigInvalid(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParam(msg.into())
    }
}
