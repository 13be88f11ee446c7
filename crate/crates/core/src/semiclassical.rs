//! WKB estimates: bound-state counting, quantized levels of the Gaussian
//! well, and transmission through the Gaussian barrier.

use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::numerics::{adaptive_quadrature, bisect_root, erf, QuadratureSettings};
use crate::potential::{PotentialKind, PotentialSpec};

/// Scan resolution used to bracket quantized levels.
pub const LEVEL_SCAN_POINTS: usize = 200;
/// Coefficient of the closed-form STM estimate `T ≃ e^(-2.2 √(v0/α))`.
pub const STM_COEFFICIENT: f64 = 2.2;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WkbCount {
    /// `(2/√π) √(v0/α) + 1/2`
    pub n_real: f64,
    /// `floor(n_real)`
    pub n_levels: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TransmissionResult {
    /// `v0 / E`
    pub beta: f64,
    /// `∫ κ dx` across the forbidden region, by quadrature.
    pub action_exact: f64,
    pub theta_exact: f64,
    pub t_exact: f64,
    /// Same action from the first-order binomial closed form.
    pub action_approx: f64,
    pub theta_approx: f64,
    pub t_approx: f64,
    pub turning_points: (f64, f64),
}

fn check_positive(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("{name} must be finite and > 0, got {value}")))
    }
}

/// Predicted number of bound levels of the Gaussian well from the WKB
/// integral at `E = 0`.
pub fn wkb_count(v0: f64, alpha: f64) -> Result<WkbCount> {
    check_positive("v0", v0)?;
    check_positive("alpha", alpha)?;
    let n_real = 2.0 / PI.sqrt() * (v0 / alpha).sqrt() + 0.5;
    Ok(WkbCount { n_real, n_levels: n_real.floor() as u32 })
}

/// `∫ √(2(E - V)) dx` between the turning points of the Gaussian well at
/// energy `-v0 < E < 0`.
pub fn quantization_integral(spec: &PotentialSpec, energy: f64) -> Result<f64> {
    if spec.kind() != PotentialKind::GaussianWell {
        return Err(Error::UnsupportedKind(spec.kind()));
    }
    let (v0, alpha) = (spec.v0(), spec.alpha());
    if !(energy > -v0 && energy < 0.0) {
        return Err(invalid(format!("energy must lie in (-v0, 0), got {energy}")));
    }
    let x_turn = ((v0 / -energy).ln() / alpha).sqrt();
    let integrand = |x: f64| (2.0 * (energy + v0 * (-alpha * x * x).exp())).max(0.0).sqrt();
    // the integrand is even
    Ok(2.0 * adaptive_quadrature(integrand, 0.0, x_turn, QuadratureSettings::default())?)
}

/// WKB energies `E_n`, `n = 1..=max_n`, solving
/// `∫ √(2(E - V)) dx = (n - ½)π` for the Gaussian well. Levels without a
/// solution below zero are omitted.
pub fn wkb_levels(spec: &PotentialSpec, max_n: usize) -> Result<Vec<f64>> {
    if spec.kind() != PotentialKind::GaussianWell {
        return Err(Error::UnsupportedKind(spec.kind()));
    }
    if max_n == 0 {
        return Err(invalid("max_n must be >= 1"));
    }
    let v0 = spec.v0();
    let e_lo = -v0 * (1.0 - 1e-9);
    let e_hi = -v0 * 1e-9;
    let step = (e_hi - e_lo) / (LEVEL_SCAN_POINTS - 1) as f64;
    let scan = (0..LEVEL_SCAN_POINTS)
        .map(|i| {
            let e = if i == LEVEL_SCAN_POINTS - 1 { e_hi } else { e_lo + i as f64 * step };
            quantization_integral(spec, e).map(|q| (e, q))
        })
        .collect::<Result<Vec<_>>>()?;

    let mut levels = Vec::new();
    for n in 1..=max_n {
        let target = (n as f64 - 0.5) * PI;
        let Some(w) = scan.windows(2).find(|w| w[0].1 < target && w[1].1 >= target) else {
            break;
        };
        let mut failure = None;
        let energy = bisect_root(
            |e| match quantization_integral(spec, e) {
                Ok(q) => q - target,
                Err(err) => {
                    failure.get_or_insert(err);
                    f64::NAN
                }
            },
            w[0].0,
            w[1].0,
            1e-12 * v0,
        );
        if let Some(err) = failure {
            return Err(err);
        }
        levels.push(energy?);
    }
    Ok(levels)
}

/// WKB transmission through the Gaussian barrier of height `v0` at energy
/// `0 < e < v0`, by quadrature and by the closed-form approximation.
pub fn transmission(v0: f64, alpha: f64, e: f64) -> Result<TransmissionResult> {
    check_positive("v0", v0)?;
    check_positive("alpha", alpha)?;
    if !(e.is_finite() && e > 0.0 && e < v0) {
        return Err(invalid(format!("energy must satisfy 0 < e < v0 = {v0}, got {e}")));
    }
    let beta = v0 / e;
    let log_beta = (v0 / e).ln();
    let x_turn = (log_beta / alpha).sqrt();
    let scale = (2.0 * v0 / alpha).sqrt();

    // κ integral after x = y √(ln β / α):
    //   √(2 v0 ln β / α) ∫₋₁¹ √(β^(-y²) - β⁻¹) dy
    // with β^(-y²) - β⁻¹ = β⁻¹ expm1((1 - y²) ln β), rescaled by ln β so the
    // integrand stays O(1) as β → 1.
    let integrand = |y: f64| ((1.0 - y * y) * log_beta).exp_m1().max(0.0) / (log_beta * beta);
    let integral = adaptive_quadrature(|y| integrand(y).sqrt(), 0.0, 1.0, QuadratureSettings::default())?;
    let action_exact = scale * log_beta * 2.0 * integral;

    let root = log_beta.sqrt();
    let action_approx = scale * (root + PI.sqrt() / 2.0 * erf(root) - root / beta);

    Ok(TransmissionResult {
        beta,
        action_exact,
        theta_exact: action_exact.exp(),
        t_exact: (-2.0 * action_exact).exp(),
        action_approx,
        theta_approx: action_approx.exp(),
        t_approx: (-2.0 * action_approx).exp(),
        turning_points: (-x_turn, x_turn),
    })
}

/// [`transmission`] parameterized by `β = v0/E` instead of the energy.
pub fn transmission_at_beta(v0: f64, alpha: f64, beta: f64) -> Result<TransmissionResult> {
    if !(beta.is_finite() && beta > 1.0) {
        return Err(invalid(format!("beta must be > 1, got {beta}")));
    }
    transmission(v0, alpha, v0 / beta)
}

/// The engineering estimate `T ≃ exp(-2.2 √(v0/α))` quoted for a tip-sample
/// gap at `E = v0/2`.
pub fn stm_estimate(v0_over_alpha: f64) -> Result<f64> {
    check_positive("v0/alpha", v0_over_alpha)?;
    Ok((-STM_COEFFICIENT * v0_over_alpha.sqrt()).exp())
}

/// Time-energy uncertainty criterion for tunneling: `α/8 > v0 - e`.
pub fn uncertainty_tunneling_condition(v0: f64, alpha: f64, e: f64) -> Result<bool> {
    check_positive("v0", v0)?;
    check_positive("alpha", alpha)?;
    if !(e.is_finite() && e < v0) {
        return Err(invalid(format!("energy must be below the barrier top {v0}, got {e}")));
    }
    Ok(alpha / 8.0 > v0 - e)
}
