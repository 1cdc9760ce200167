//! Error types shared by every evaluator in the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Evaluation requested exactly at a pole of the function.
    #[error("pole error: {0}")]
    Pole(String),

    /// Argument outside the domain the defining formula is valid on.
    #[error("domain error: {0}")]
    Domain(String),

    /// A series or quadrature failed to reach the target accuracy within
    /// the context's `max_terms` / level budget.
    #[error("convergence error: {0}")]
    Convergence(String),

    /// An iteration cap (e.g. continued-fraction period search) was exceeded.
    #[error("limit error: {0}")]
    Limit(String),

    /// A fixed-point equation degenerated to a rational root.
    #[error("degenerate error: {0}")]
    Degenerate(String),

    /// Unknown verification suite name.
    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    /// Malformed textual input (quadratic-irrational literals, cycle specs, ...).
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
