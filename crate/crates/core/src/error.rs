use thiserror::Error;

/// Errors produced by the numerical kernel, the graph layer and the rigidity tools.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(
        "eigensolver did not converge after {sweeps} sweeps (off-diagonal residual {residual:e})"
    )]
    NumericalFailure {
        sweeps: usize,
        residual: f64,
        /// Diagonal of the partially reduced matrix at the point of failure.
        partial_diagonal: Vec<f64>,
    },

    #[error(
        "matrix is not positive semi-definite: eigenvalue {eigenvalue:e} below -{threshold:e}"
    )]
    NotPsd { eigenvalue: f64, threshold: f64 },

    #[error(
        "graph has {n} vertices; exhaustive enumeration is capped at {max} (use the pebble game)"
    )]
    Capacity { n: usize, max: usize },

    #[error("invalid Henneberg step: {0}")]
    InvalidStep(String),

    #[error("degenerate configuration: points {i} and {j} coincide")]
    DegenerateConfiguration { i: usize, j: usize },

    #[error("no rigid configuration found after {attempts} attempts")]
    NotFound { attempts: usize },

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
