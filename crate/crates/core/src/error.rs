use thiserror::Error;

/// Failures reported by the elliptic-function routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain where the function is defined
    /// (or where this library evaluates it).
    #[error("domain error: {0}")]
    Domain(String),

    /// Adaptive quadrature hit its subdivision limit before meeting the tolerance.
    #[error("quadrature did not converge on [{a}, {b}] within {depth} bisections")]
    Convergence { a: f64, b: f64, depth: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}
