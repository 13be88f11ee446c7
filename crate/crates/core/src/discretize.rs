//! Uniform grids and the three-point finite-difference Hamiltonian.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::potential::{PotentialKind, PotentialSpec};

/// Default number of mesh intervals.
pub const DEFAULT_MESH: usize = 4000;
/// Minimum default box half-width.
pub const DEFAULT_MIN_HALF_WIDTH: f64 = 12.0;

/// Uniform mesh with `r` intervals on `[x_min, x_max]`. Only the `r - 1`
/// interior points carry unknowns; the endpoints are Dirichlet boundaries.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Grid {
    x_min: f64,
    x_max: f64,
    r: usize,
    delta: f64,
    #[serde(skip)]
    points: Vec<f64>,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, r: usize) -> Result<Self> {
        if !(x_min.is_finite() && x_max.is_finite() && x_min < x_max) {
            return Err(invalid(format!("grid needs finite x_min < x_max, got [{x_min}, {x_max}]")));
        }
        if r < 3 {
            return Err(invalid(format!("mesh count must be >= 3, got {r}")));
        }
        let delta = (x_max - x_min) / r as f64;
        let points = (1..r).map(|k| x_min + k as f64 * delta).collect();
        Ok(Self { x_min, x_max, r, delta, points })
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    /// Number of mesh intervals.
    pub fn r(&self) -> usize {
        self.r
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Interior points `x_k = x_min + kδ`, `k = 1..r-1`.
    pub fn points(&self) -> &[f64] {
        &self.points
    }

    /// Number of unknowns, `r - 1`.
    pub fn dim(&self) -> usize {
        self.points.len()
    }

    /// True when the interior points pair up as mirror images about 0.
    pub fn is_symmetric(&self) -> bool {
        let tol = 1e-12 * self.x_max.abs().max(self.x_min.abs()).max(1.0);
        self.r.is_multiple_of(2) && (self.x_min + self.x_max).abs() <= tol
    }
}

/// Build a grid; same as [`Grid::new`].
pub fn build_grid(x_min: f64, x_max: f64, r: usize) -> Result<Grid> {
    Grid::new(x_min, x_max, r)
}

/// Default `(x_min, x_max, r)` for a potential.
///
/// The box half-width is `X = max(12, 12/√α)`; full-line kinds use `[-X, X]`,
/// the radial kind `[0, 2X]`. `r` is [`DEFAULT_MESH`].
pub fn default_domain(spec: &PotentialSpec) -> (f64, f64, usize) {
    let half = DEFAULT_MIN_HALF_WIDTH.max(DEFAULT_MIN_HALF_WIDTH / spec.alpha().sqrt());
    match spec.kind() {
        PotentialKind::HalfGaussianRadial => (0.0, 2.0 * half, DEFAULT_MESH),
        _ => (-half, half, DEFAULT_MESH),
    }
}

pub fn default_grid(spec: &PotentialSpec) -> Result<Grid> {
    let (lo, hi, r) = default_domain(spec);
    Grid::new(lo, hi, r)
}

/// Real symmetric tridiagonal matrix stored as a diagonal and a single
/// off-diagonal shared by the sub- and super-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalOperator {
    diag: Vec<f64>,
    offdiag: Vec<f64>,
}

impl TridiagonalOperator {
    pub fn new(diag: Vec<f64>, offdiag: Vec<f64>) -> Result<Self> {
        if diag.is_empty() {
            return Err(invalid("tridiagonal operator needs at least one diagonal entry"));
        }
        if offdiag.len() + 1 != diag.len() {
            return Err(invalid(format!(
                "off-diagonal length {} does not match diagonal length {}",
                offdiag.len(),
                diag.len()
            )));
        }
        if diag.iter().chain(&offdiag).any(|v| !v.is_finite()) {
            return Err(invalid("tridiagonal entries must be finite"));
        }
        Ok(Self { diag, offdiag })
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn offdiag(&self) -> &[f64] {
        &self.offdiag
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    /// `y = A x`.
    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.dim();
        let mut y: Vec<f64> = self.diag.iter().zip(x).map(|(d, v)| d * v).collect();
        for i in 0..n - 1 {
            y[i] += self.offdiag[i] * x[i + 1];
            y[i + 1] += self.offdiag[i] * x[i];
        }
        y
    }

    /// Gershgorin interval containing every eigenvalue.
    pub fn gershgorin(&self) -> (f64, f64) {
        let n = self.dim();
        let mut lo = f64::INFINITY;
        let mut hi = f64::NEG_INFINITY;
        for i in 0..n {
            let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
            let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
            lo = lo.min(self.diag[i] - left - right);
            hi = hi.max(self.diag[i] + left + right);
        }
        (lo, hi)
    }

    /// Infinity norm (max absolute row sum); equals the 1-norm by symmetry.
    pub fn norm(&self) -> f64 {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let left = if i > 0 { self.offdiag[i - 1].abs() } else { 0.0 };
                let right = if i + 1 < n { self.offdiag[i].abs() } else { 0.0 };
                self.diag[i].abs() + left + right
            })
            .fold(0.0, f64::max)
    }
}

/// Assemble `H = -½ d²/dx² + V` on the interior points of `grid`:
/// diagonal `δ⁻² + V(x_k)`, off-diagonal `-δ⁻²/2`.
pub fn build_hamiltonian(spec: &PotentialSpec, grid: &Grid) -> Result<TridiagonalOperator> {
    if spec.kind() == PotentialKind::HalfGaussianRadial && grid.x_min() != 0.0 {
        return Err(invalid("radial grids must start at x_min = 0"));
    }
    let inv_d2 = grid.delta().powi(-2);
    let diag = grid
        .points()
        .iter()
        .map(|&x| spec.evaluate(x).map(|v| inv_d2 + v))
        .collect::<Result<Vec<_>>>()?;
    let offdiag = vec![-0.5 * inv_d2; grid.dim() - 1];
    TridiagonalOperator::new(diag, offdiag)
}
