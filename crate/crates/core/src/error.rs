use thiserror::Error;

use crate::potential::PotentialKind;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("radial potential is only defined for x > 0, got x = {x}")]
    RadialDomain { x: f64 },

    #[error("operation not supported for {0:?}")]
    UnsupportedKind(PotentialKind),

    #[error("no sign change on [{lo}, {hi}]")]
    NoBracket { lo: f64, hi: f64 },

    #[error("function returned a non-finite value at x = {x}")]
    NonFinite { x: f64 },

    #[error("quadrature did not reach tolerance: estimate {estimate}, error bound {error_bound}")]
    DepthExceeded { estimate: f64, error_bound: f64 },

    #[error("inverse iteration did not converge for eigenvalue index {index}")]
    ConvergenceFailure { index: usize },

    #[error("grid is not symmetric about the origin")]
    AsymmetricGrid,

    #[error("need at least {needed} bound states, found {found}")]
    InsufficientBoundStates { needed: usize, found: usize },
}

impl Error {
    /// Numerical failures as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::DepthExceeded { .. }
                | Error::ConvergenceFailure { .. }
                | Error::InsufficientBoundStates { .. }
                | Error::NonFinite { .. }
        )
    }
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}
