use thiserror::Error;

/// Errors surfaced by evaluation, quadrature and verification routines.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("gamma pole: {0} is (numerically) a non-positive integer")]
    Pole(String),
    #[error("series did not converge within {max_terms} terms")]
    NonConvergence { max_terms: usize },
    #[error("domain error: {0}")]
    Domain(String),
    #[error("argument outside the validity sector: {0}")]
    Sector(String),
    #[error("requested tolerance unattainable: {0}")]
    Accuracy(String),
    #[error("adaptive quadrature exceeded its subdivision budget (err {err:e}, tol {tol:e})")]
    SubdivisionLimit { err: f64, tol: f64 },
    #[error("tail truncation bound {bound:e} exceeds tolerance {tol:e}")]
    TailBoundExceeded { bound: f64, tol: f64 },
    #[error("epsilon extrapolation diverged: {0}")]
    ExtrapolationDivergence(String),
    #[error("inner integral failed at outer node {phi}: {source}")]
    InnerFailure {
        phi: f64,
        #[source]
        source: Box<Error>,
    },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported index: {0}")]
    UnsupportedIndex(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;
