use thiserror::Error;

/// Failures surfaced by the numeric routines.
///
/// Every variant carries enough text for the CLI to attribute the failure to
/// a stage without a backtrace.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("pole: {0}")]
    Pole(String),

    #[error("divergence: {0}")]
    Divergence(String),

    #[error("precision exhausted: {what}; retry with at least {suggested_digits} working digits")]
    Precision { what: String, suggested_digits: u32 },

    #[error("{what}: no branch passed its defining check (residuals: {residuals:?})")]
    Branch { what: String, residuals: Vec<f64> },

    #[error("no convergence: {0}")]
    Convergence(String),

    #[error("degenerate input: {0}")]
    Degenerate(String),

    #[error("reduction inconsistency: {0}")]
    Reduction(String),

    #[error("continuation failed: {0}")]
    Continuation(String),

    #[error("polish failed: {0}")]
    Polish(String),

    #[error("no modulus solves a = {a}: the attainable minimum is {a_min}")]
    NoModulus { a: String, a_min: String },

    #[error("invalid numeric context: {0}")]
    InvalidContext(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
