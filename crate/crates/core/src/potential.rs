//! Potential-energy functions in natural units.
//!
//! Every supported potential is built from the Gaussian `e^(-αx²)` with depth
//! or height `v0`:
//!
//! | kind                 | V(x)                               |
//! |----------------------|------------------------------------|
//! | `GaussianWell`       | `-v0 e^(-αx²)`                     |
//! | `GaussianBarrier`    | `+v0 e^(-αx²)`                     |
//! | `DoubleGaussianWell` | `-v0 x² e^(-αx²)`                  |
//! | `HalfGaussianRadial` | `-v0 e^(-αx²) + l(l+1)/(2x²)`, x>0 |

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PotentialKind {
    GaussianWell,
    GaussianBarrier,
    DoubleGaussianWell,
    HalfGaussianRadial,
}

impl PotentialKind {
    /// True for potentials defined on the whole line.
    pub fn is_full_line(self) -> bool {
        !matches!(self, PotentialKind::HalfGaussianRadial)
    }

    pub fn name(self) -> &'static str {
        match self {
            PotentialKind::GaussianWell => "gaussian-well",
            PotentialKind::GaussianBarrier => "gaussian-barrier",
            PotentialKind::DoubleGaussianWell => "double-gaussian-well",
            PotentialKind::HalfGaussianRadial => "half-gaussian",
        }
    }
}

/// A validated potential description. Construct through [`PotentialSpec::new`]
/// or one of the named constructors so that `v0 > 0` and `alpha > 0` hold.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PotentialSpec {
    kind: PotentialKind,
    v0: f64,
    alpha: f64,
    l: u32,
}

impl PotentialSpec {
    pub fn new(kind: PotentialKind, v0: f64, alpha: f64, l: u32) -> Result<Self> {
        if !(v0.is_finite() && v0 > 0.0) {
            return Err(invalid(format!("v0 must be finite and > 0, got {v0}")));
        }
        if !(alpha.is_finite() && alpha > 0.0) {
            return Err(invalid(format!("alpha must be finite and > 0, got {alpha}")));
        }
        if l != 0 && kind != PotentialKind::HalfGaussianRadial {
            return Err(invalid("angular momentum l only applies to the radial potential"));
        }
        Ok(Self { kind, v0, alpha, l })
    }

    pub fn gaussian_well(v0: f64, alpha: f64) -> Result<Self> {
        Self::new(PotentialKind::GaussianWell, v0, alpha, 0)
    }

    pub fn gaussian_barrier(v0: f64, alpha: f64) -> Result<Self> {
        Self::new(PotentialKind::GaussianBarrier, v0, alpha, 0)
    }

    pub fn double_well(v0: f64, alpha: f64) -> Result<Self> {
        Self::new(PotentialKind::DoubleGaussianWell, v0, alpha, 0)
    }

    pub fn half_gaussian(v0: f64, alpha: f64, l: u32) -> Result<Self> {
        Self::new(PotentialKind::HalfGaussianRadial, v0, alpha, l)
    }

    pub fn kind(&self) -> PotentialKind {
        self.kind
    }

    pub fn v0(&self) -> f64 {
        self.v0
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    /// Potential energy at `x`.
    ///
    /// The radial kind includes the centrifugal term and is only defined for
    /// `x > 0`; `x <= 0` returns [`Error::RadialDomain`].
    pub fn evaluate(&self, x: f64) -> Result<f64> {
        if !x.is_finite() {
            return Err(invalid(format!("position must be finite, got {x}")));
        }
        let gauss = (-self.alpha * x * x).exp();
        let v = match self.kind {
            PotentialKind::GaussianWell => -self.v0 * gauss,
            PotentialKind::GaussianBarrier => self.v0 * gauss,
            PotentialKind::DoubleGaussianWell => -self.v0 * x * x * gauss,
            PotentialKind::HalfGaussianRadial => {
                if x <= 0.0 {
                    return Err(Error::RadialDomain { x });
                }
                let l = f64::from(self.l);
                -self.v0 * gauss + l * (l + 1.0) / (2.0 * x * x)
            }
        };
        Ok(v)
    }

    /// Closed-form `∫V dx` over the whole line.
    pub fn integral_over_line(&self) -> Result<f64> {
        let root = (PI / self.alpha).sqrt();
        match self.kind {
            PotentialKind::GaussianWell => Ok(-self.v0 * root),
            PotentialKind::GaussianBarrier => Ok(self.v0 * root),
            // ∫x² e^(-αx²) dx = √π / (2 α^{3/2})
            PotentialKind::DoubleGaussianWell => {
                Ok(-self.v0 * PI.sqrt() / (2.0 * self.alpha.powf(1.5)))
            }
            PotentialKind::HalfGaussianRadial => Err(Error::UnsupportedKind(self.kind)),
        }
    }

    /// Sufficient (not necessary) condition for at least one bound state:
    /// the potential integrates to a negative number over the line.
    pub fn bound_state_sufficient(&self) -> Result<bool> {
        Ok(self.integral_over_line()? < 0.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{adaptive_quadrature, QuadratureSettings};

    #[test]
    fn well_at_origin_and_far_away() {
        let s = PotentialSpec::gaussian_well(1.0, 1.0).unwrap();
        assert_eq!(s.evaluate(0.0).unwrap(), -1.0);
        assert!(s.evaluate(10.0).unwrap().abs() < 1e-43);
        assert!(s.evaluate(-10.0).unwrap().abs() < 1e-43);
    }

    #[test]
    fn double_well_stationary_point() {
        let s = PotentialSpec::double_well(3.0, 1.0).unwrap();
        assert_eq!(s.evaluate(0.0).unwrap(), 0.0);
        let v = s.evaluate(1.0).unwrap();
        assert!((v + 3.0 / std::f64::consts::E).abs() < 1e-15);
        assert!((v + 1.1036).abs() < 1e-4);
    }

    #[test]
    fn barrier_peak() {
        let s = PotentialSpec::gaussian_barrier(10.0, 1.0).unwrap();
        assert_eq!(s.evaluate(0.0).unwrap(), 10.0);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(PotentialSpec::gaussian_well(0.0, 1.0).is_err());
        assert!(PotentialSpec::gaussian_well(1.0, -1.0).is_err());
        assert!(PotentialSpec::gaussian_well(f64::NAN, 1.0).is_err());
        assert!(PotentialSpec::new(PotentialKind::GaussianWell, 1.0, 1.0, 2).is_err());
    }

    #[test]
    fn radial_domain() {
        let s = PotentialSpec::half_gaussian(3.0, 1.0, 1).unwrap();
        assert_eq!(s.evaluate(0.0), Err(Error::RadialDomain { x: 0.0 }));
        assert!(s.evaluate(-1.0).is_err());
        // -3 e^{-1} + 1·2/(2·1)
        let v = s.evaluate(1.0).unwrap();
        assert!((v - (1.0 - 3.0 / std::f64::consts::E)).abs() < 1e-14);
        assert!(s.integral_over_line().is_err());
    }

    #[test]
    fn closed_form_integrals() {
        let pi = std::f64::consts::PI;
        let w = PotentialSpec::gaussian_well(1.0, pi).unwrap();
        assert!((w.integral_over_line().unwrap() + 1.0).abs() < 1e-15);
        let b = PotentialSpec::gaussian_barrier(1.0, pi).unwrap();
        assert!((b.integral_over_line().unwrap() - 1.0).abs() < 1e-15);
        let d = PotentialSpec::double_well(2.0, 1.0).unwrap();
        assert!((d.integral_over_line().unwrap() + pi.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn integrals_match_quadrature() {
        let settings = QuadratureSettings { abs_tol: 1e-12, max_depth: 50 };
        for spec in [
            PotentialSpec::gaussian_well(1.3, 0.7).unwrap(),
            PotentialSpec::gaussian_barrier(2.0, 3.0).unwrap(),
            PotentialSpec::double_well(2.0, 1.0).unwrap(),
            PotentialSpec::double_well(5.0, 0.2).unwrap(),
        ] {
            let half = 40.0 / spec.alpha().sqrt();
            let q = adaptive_quadrature(|x| spec.evaluate(x).unwrap(), -half, half, settings)
                .unwrap();
            let exact = spec.integral_over_line().unwrap();
            assert!(((q - exact) / exact).abs() < 1e-8, "{spec:?}: {q} vs {exact}");
        }
    }

    #[test]
    fn bound_state_predicate() {
        assert!(PotentialSpec::gaussian_well(0.01, 50.0).unwrap().bound_state_sufficient().unwrap());
        assert!(!PotentialSpec::gaussian_barrier(1.0, 1.0).unwrap().bound_state_sufficient().unwrap());
        assert!(PotentialSpec::double_well(3.0, 1.0).unwrap().bound_state_sufficient().unwrap());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn full_line_potentials_are_even(v0 in 0.01f64..100.0, alpha in 0.01f64..10.0, x in -20.0f64..20.0) {
                for kind in [PotentialKind::GaussianWell, PotentialKind::GaussianBarrier, PotentialKind::DoubleGaussianWell] {
                    let s = PotentialSpec::new(kind, v0, alpha, 0).unwrap();
                    prop_assert_eq!(s.evaluate(x).unwrap(), s.evaluate(-x).unwrap());
                }
            }

            #[test]
            fn well_and_barrier_cancel(v0 in 0.01f64..100.0, alpha in 0.01f64..10.0, x in -20.0f64..20.0) {
                let w = PotentialSpec::gaussian_well(v0, alpha).unwrap().evaluate(x).unwrap();
                let b = PotentialSpec::gaussian_barrier(v0, alpha).unwrap().evaluate(x).unwrap();
                prop_assert_eq!(w + b, 0.0);
                prop_assert!(w >= -v0 && w <= 0.0);
            }
        }
    }
}
