//! Gaussian trial-function upper bound on the ground-state energy of the
//! Gaussian well.
//!
//! For the normalized trial state `ψ(x) = (2b/π)^{1/4} e^(-bx²)` the energy is
//! `⟨H⟩(b) = b/2 - v0 √(2b/(2b+α))`; it is stationary where
//! `b (2b+α)³ = 2 v0² α²`.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::numerics::bisect_root;

/// Absolute tolerance on the optimal width parameter.
pub const ROOT_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct VariationalResult {
    pub b_star: f64,
    pub energy_bound: f64,
    /// Stationarity function evaluated at `b_star`.
    pub residual: f64,
}

fn check_positive(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("{name} must be finite and > 0, got {value}")))
    }
}

/// `⟨H⟩` for the Gaussian trial state of width parameter `b`.
pub fn expectation_h(b: f64, v0: f64, alpha: f64) -> Result<f64> {
    check_positive("b", b)?;
    check_positive("v0", v0)?;
    check_positive("alpha", alpha)?;
    Ok(b / 2.0 - v0 * (2.0 * b / (2.0 * b + alpha)).sqrt())
}

/// `b (2b+α)³ - 2 v0² α²`, strictly increasing in `b > 0`.
pub fn stationarity(b: f64, v0: f64, alpha: f64) -> f64 {
    b * (2.0 * b + alpha).powi(3) - 2.0 * v0 * v0 * alpha * alpha
}

/// Minimize `⟨H⟩` over `b` by bisecting the stationarity condition.
pub fn solve_optimal_b(v0: f64, alpha: f64) -> Result<VariationalResult> {
    check_positive("v0", v0)?;
    check_positive("alpha", alpha)?;
    let f = |b: f64| stationarity(b, v0, alpha);
    let mut hi = 1.0;
    while f(hi) <= 0.0 {
        hi *= 2.0;
    }
    // f(0) = -2 v0² α² < 0, so [0, hi] always brackets; the root itself is > 0
    let b_star = bisect_root(f, 0.0, hi, ROOT_TOL)?;
    Ok(VariationalResult {
        b_star,
        energy_bound: expectation_h(b_star, v0, alpha)?,
        residual: f(b_star),
    })
}
