use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{func} has a pole at s = {at}")]
    Pole { func: &'static str, at: String },

    #[error("argument outside the supported domain: {0}")]
    Domain(String),

    #[error(
        "order s = {s} lies within {radius:e} of the integer {n}; use the integer-limit evaluation"
    )]
    NearInteger { s: String, n: i64, radius: f64 },

    #[error("order s = {0} is an integer; the non-integer formula does not apply")]
    IntegerOrder(String),

    #[error("series did not converge within {cap} terms (last term {last:e})")]
    SlowConvergence { cap: usize, last: f64 },

    #[error("index {index} exceeds the table size {max}")]
    OutOfRange { index: usize, max: usize },

    #[error("li_s(0) is undefined for Re s <= 1.5 (s = {0})")]
    Origin(String),

    #[error("quadrature did not reach tolerance {tol:e} (estimate {estimate:e})")]
    Quadrature { tol: f64, estimate: f64 },

    #[error("singularity x^{exponent} is not integrable at the origin")]
    NonIntegrable { exponent: String },

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    /// Domain-type failures (as opposed to malformed input).
    pub fn is_domain(&self) -> bool {
        !matches!(self, Error::InvalidInput(_))
    }
}
