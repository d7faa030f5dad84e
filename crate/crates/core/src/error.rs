use thiserror::Error;

/// Errors produced by the evaluators and the fitter.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite input to {0}")]
    NonFinite(&'static str),

    #[error("order {order} out of range (max {max})")]
    OrderOutOfRange { order: usize, max: usize },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("coincident endpoints: chord length is zero")]
    DegenerateInput,

    #[error("excluded angle configuration phi0 = {phi0}, phi1 = {phi1} (curve length is unbounded)")]
    ExcludedAngles { phi0: f64, phi1: f64 },

    #[error("Newton iteration did not converge after {iterations} iterations (A = {last}, |g(A)| = {residual:e})")]
    NoConvergence {
        last: f64,
        iterations: usize,
        residual: f64,
    },

    #[error("derivative of g vanished at A = {at} and no sign change was found in the bracket")]
    SingularDerivative { at: f64 },

    #[error("h(A) = {h} is not positive at the root A = {a}")]
    Inconsistent { a: f64, h: f64 },

    #[error("at least 2 samples are required, got {0}")]
    TooFewSamples(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
