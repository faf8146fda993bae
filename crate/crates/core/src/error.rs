use num_complex::Complex64;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The argument is inside the exclusion disk around a pole.
    #[error("{function} has a pole at {at}")]
    Pole {
        function: &'static str,
        at: Complex64,
    },

    /// The value is not representable as a finite double.
    #[error("{function} overflows at {at}")]
    Overflow {
        function: &'static str,
        at: Complex64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    /// A series or product is evaluated outside its region of convergence.
    #[error("divergent: {0}")]
    Divergence(String),

    #[error("no convergence: {0}")]
    NoConvergence(String),

    #[error("resource limit exceeded: {0}")]
    Resource(String),

    #[error("invalid root system type: {0}")]
    InvalidType(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// Failure inside one level of a multi-level product.
    #[error("level {index}: {source}")]
    Level { index: usize, source: Box<Error> },
}

impl Error {
    /// Strips any [`Error::Level`] wrappers.
    pub fn root_cause(&self) -> &Error {
        match self {
            Error::Level { source, .. } => source.root_cause(),
            e => e,
        }
    }
}

pub(crate) fn finite(value: Complex64, function: &'static str, at: Complex64) -> Result<Complex64> {
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow { function, at })
    }
}
