use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse `{0}` as an exact rational")]
    ParseScalar(String),

    #[error("double factorial is defined here only for -1 and positive odd integers, got {0}")]
    DoubleFactorialDomain(i64),

    #[error("quadrature order must be in 1..=128, got {0}")]
    QuadratureOrder(usize),

    #[error("Newton iteration for root {root} of P_{order} did not converge in {iterations} steps")]
    QuadratureNonConvergence {
        order: usize,
        root: usize,
        iterations: usize,
    },

    #[error(
        "a {nodes}-node rule is exact only to degree {exact_to}, integrand has degree {degree}"
    )]
    QuadratureUnderResolved {
        nodes: usize,
        exact_to: usize,
        degree: usize,
    },

    #[error("malformed Gram matrix: {0}")]
    MalformedGram(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
