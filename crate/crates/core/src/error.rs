use thiserror::Error;

use crate::scalar::Backend;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ScalarError {
    #[error("cannot combine {left} and {right} scalars")]
    BackendMismatch { left: Backend, right: Backend },
    #[error("square root of negative value {0}")]
    NegativeSqrt(String),
    #[error("{0} has no exact rational square root")]
    NotExactlyRepresentable(String),
    #[error("tolerances must be positive and finite (abs {abs_eps}, rel {rel_eps})")]
    InvalidTolerance { abs_eps: f64, rel_eps: f64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("matrix is not Hermitian (max deviation {deviation:e})")]
    NotHermitian { deviation: f64 },
    #[error("matrix is not positive definite")]
    NotPositiveDefinite,
    #[error("matrix is singular")]
    Singular,
    #[error("expected determinant 1, got {det}")]
    NotUnimodular { det: String },
    #[error("mass must be positive, got {0}")]
    NonPositiveMass(String),
    #[error("matrix is not a proper orthochronous Lorentz transformation: {0}")]
    NotProperOrthochronous(String),
    #[error("cannot normalize: {0}")]
    NotNormalizable(String),
    #[error("grid point {index}: {source}")]
    GridPoint {
        index: usize,
        #[source]
        source: Box<Error>,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
