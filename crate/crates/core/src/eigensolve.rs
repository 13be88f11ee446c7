//! Symmetric tridiagonal eigensolver and the packaged Schrödinger solve.
//!
//! Eigenvalues come from Sturm-sequence bisection, eigenvectors from inverse
//! iteration on the pivoted LU factorization of `A - λI`. Vectors belonging to
//! eigenvalues closer than `1e-6‖A‖` are re-orthogonalized against each other
//! during the iteration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::discretize::{build_hamiltonian, Grid, TridiagonalOperator};
use crate::error::{invalid, Error, Result};
use crate::potential::PotentialSpec;

const MAX_INVERSE_ITERATIONS: usize = 10;
const START_SEED: u64 = 1;
const CLUSTER_REL_GAP: f64 = 1e-6;
const CONVERGED_REL_RESIDUAL: f64 = 1e-10;

/// Relative amplitude at the box edge above which a bound state is flagged.
pub const CONTAMINATION_THRESHOLD: f64 = 1e-6;
/// Floor of the bound-state energy threshold.
pub const BOUND_THRESHOLD_FLOOR: f64 = 1e-8;

/// Lowest eigenpairs of a tridiagonal operator. Vectors have unit Euclidean norm.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPairs {
    pub values: Vec<f64>,
    pub vectors: Vec<Vec<f64>>,
}

/// Number of eigenvalues strictly below `sigma`, from the signs of the
/// pivots of the `LDLᵀ` factorization of `A - σI`.
pub fn sturm_count(op: &TridiagonalOperator, sigma: f64) -> usize {
    let d = op.diag();
    let e = op.offdiag();
    let pivmin = pivot_floor(op);
    let mut count = 0;
    let mut q = d[0] - sigma;
    for i in 0..d.len() {
        if i > 0 {
            q = (d[i] - sigma) - e[i - 1] * e[i - 1] / q;
        }
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn pivot_floor(op: &TridiagonalOperator) -> f64 {
    let max_e2 = op.offdiag().iter().map(|e| e * e).fold(0.0, f64::max);
    (f64::EPSILON * f64::EPSILON * max_e2).max(f64::MIN_POSITIVE)
}

/// The `index`-th smallest eigenvalue (0-based) by bisection on the Sturm
/// count, refined to the resolution of the floating-point grid.
fn bisect_eigenvalue(op: &TridiagonalOperator, index: usize, lo: f64, hi: f64) -> f64 {
    let (mut lo, mut hi) = (lo, hi);
    for _ in 0..256 {
        let mid = lo + 0.5 * (hi - lo);
        if mid <= lo || mid >= hi {
            break;
        }
        if hi - lo <= 2.0 * f64::EPSILON * lo.abs().max(hi.abs()) {
            break;
        }
        if sturm_count(op, mid) > index {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    lo + 0.5 * (hi - lo)
}

/// Pivoted LU of a shifted tridiagonal matrix (the `dgttrf` layout).
struct ShiftedLu {
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    l: Vec<f64>,
    swapped: Vec<bool>,
}

impl ShiftedLu {
    fn factor(op: &TridiagonalOperator, shift: f64, tiny: f64) -> Self {
        let n = op.dim();
        let mut d: Vec<f64> = op.diag().iter().map(|v| v - shift).collect();
        let mut du = op.offdiag().to_vec();
        let dl = op.offdiag();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut l = vec![0.0; n.saturating_sub(1)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                if d[i].abs() < tiny {
                    d[i] = tiny.copysign(d[i]);
                }
                let m = dl[i] / d[i];
                l[i] = m;
                d[i + 1] -= m * du[i];
            } else {
                let m = d[i] / dl[i];
                l[i] = m;
                d[i] = dl[i];
                let temp = d[i + 1];
                d[i + 1] = du[i] - m * temp;
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -m;
                }
                du[i] = temp;
                swapped[i] = true;
            }
        }
        if d[n - 1].abs() < tiny {
            d[n - 1] = tiny.copysign(d[n - 1]);
        }
        Self { d, du, du2, l, swapped }
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.d.len();
        for i in 0..n - 1 {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.l[i] * b[i];
            } else {
                b[i + 1] -= self.l[i] * b[i];
            }
        }
        b[n - 1] /= self.d[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.d[i];
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) -> f64 {
    let n = dot(v, v).sqrt();
    if n > 0.0 {
        v.iter_mut().for_each(|x| *x /= n);
    }
    n
}

fn residual_norm(op: &TridiagonalOperator, lambda: f64, v: &[f64]) -> f64 {
    op.apply(v)
        .iter()
        .zip(v)
        .map(|(av, x)| (av - lambda * x).powi(2))
        .sum::<f64>()
        .sqrt()
}

/// Lowest `how_many` eigenvalues (ascending) and unit eigenvectors.
pub fn eigen_range(op: &TridiagonalOperator, how_many: usize) -> Result<EigenPairs> {
    let n = op.dim();
    if how_many == 0 || how_many > n {
        return Err(invalid(format!("requested {how_many} eigenpairs of a {n}x{n} matrix")));
    }
    let norm = op.norm().max(f64::MIN_POSITIVE);
    let (g_lo, g_hi) = op.gershgorin();
    let pad = 2.0 * f64::EPSILON * norm + pivot_floor(op);
    let (g_lo, g_hi) = (g_lo - pad, g_hi + pad);

    let mut values = Vec::with_capacity(how_many);
    for j in 0..how_many {
        let lo = values.last().copied().unwrap_or(g_lo).max(g_lo);
        // the previous eigenvalue may be off by one ulp on the high side
        let lo = if sturm_count(op, lo) > j { g_lo } else { lo };
        values.push(bisect_eigenvalue(op, j, lo, g_hi));
    }

    let tiny = f64::EPSILON * norm;
    let mut rng = ChaCha8Rng::seed_from_u64(START_SEED);
    let mut vectors: Vec<Vec<f64>> = Vec::with_capacity(how_many);
    for (j, &lambda) in values.iter().enumerate() {
        let cluster_start = (0..j)
            .rev()
            .take_while(|&i| values[i + 1] - values[i] < CLUSTER_REL_GAP * norm)
            .last()
            .unwrap_or(j);
        let lu = ShiftedLu::factor(op, lambda, tiny);
        let mut v: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
        normalize(&mut v);
        let mut converged_at = None;
        for iteration in 0..MAX_INVERSE_ITERATIONS {
            lu.solve(&mut v);
            for _ in 0..2 {
                for u in &vectors[cluster_start..j] {
                    let c = dot(&v, u);
                    v.iter_mut().zip(u).for_each(|(x, y)| *x -= c * y);
                }
            }
            if normalize(&mut v) == 0.0 || v.iter().any(|x| !x.is_finite()) {
                return Err(Error::ConvergenceFailure { index: j });
            }
            if converged_at.is_some() {
                break;
            }
            if residual_norm(op, lambda, &v) <= CONVERGED_REL_RESIDUAL * norm {
                converged_at = Some(iteration);
            }
        }
        if converged_at.is_none() {
            return Err(Error::ConvergenceFailure { index: j });
        }
        vectors.push(v);
    }
    Ok(EigenPairs { values, vectors })
}

/// Solution of the discretized Schrödinger equation.
///
/// `states[i]` holds `ψ_i(x_k)` on `grid.points()`, normalized so that
/// `δ Σ ψ² = 1`, with its first significant sample positive.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub spec: PotentialSpec,
    pub grid: Grid,
    pub energies: Vec<f64>,
    pub states: Vec<Vec<f64>>,
    /// Estimated `O(δ²)` shift of each energy, `(δ²/24) ∫ (ψ'')² dx`.
    pub discretization_errors: Vec<f64>,
    pub bound: Vec<bool>,
    pub bound_count: usize,
    /// Bound states whose amplitude at the box edge exceeds
    /// [`CONTAMINATION_THRESHOLD`] of their maximum.
    pub contaminated: Vec<usize>,
    pub warnings: Vec<String>,
}

impl Spectrum {
    pub fn len(&self) -> usize {
        self.energies.len()
    }

    pub fn is_empty(&self) -> bool {
        self.energies.is_empty()
    }

    /// Energy below which a state counts as bound.
    pub fn bound_threshold(&self, index: usize) -> f64 {
        -BOUND_THRESHOLD_FLOOR.max(10.0 * self.discretization_errors[index])
    }
}

fn discretization_error(state: &[f64], delta: f64) -> f64 {
    let n = state.len();
    let at = |i: isize| if i < 0 || i as usize >= n { 0.0 } else { state[i as usize] };
    let d2 = delta * delta;
    let sum: f64 = (0..n as isize)
        .map(|i| ((at(i + 1) - 2.0 * at(i) + at(i - 1)) / d2).powi(2))
        .sum();
    d2 / 24.0 * delta * sum
}

/// Solve for the lowest `n_states` levels of `spec` on `grid`.
pub fn solve_schrodinger(spec: &PotentialSpec, grid: &Grid, n_states: usize) -> Result<Spectrum> {
    if n_states == 0 || n_states > grid.dim() {
        return Err(invalid(format!(
            "number of states must be in 1..={}, got {n_states}",
            grid.dim()
        )));
    }
    let op = build_hamiltonian(spec, grid)?;
    let pairs = eigen_range(&op, n_states)?;
    let delta = grid.delta();
    let scale = delta.sqrt().recip();

    let mut states = pairs.vectors;
    for state in &mut states {
        state.iter_mut().for_each(|x| *x *= scale);
        let peak = state.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        if let Some(first) = state.iter().find(|x| x.abs() > CONTAMINATION_THRESHOLD * peak) {
            if *first < 0.0 {
                state.iter_mut().for_each(|x| *x = -*x);
            }
        }
    }

    let discretization_errors: Vec<f64> =
        states.iter().map(|s| discretization_error(s, delta)).collect();
    let bound: Vec<bool> = pairs
        .values
        .iter()
        .zip(&discretization_errors)
        .map(|(&e, &err)| e < -BOUND_THRESHOLD_FLOOR.max(10.0 * err))
        .collect();
    let bound_count = bound.iter().filter(|&&b| b).count();

    let mut contaminated = Vec::new();
    let mut warnings = Vec::new();
    for (i, state) in states.iter().enumerate().filter(|(i, _)| bound[*i]) {
        let peak = state.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let edge = state[0].abs().max(state[state.len() - 1].abs());
        if edge > CONTAMINATION_THRESHOLD * peak {
            contaminated.push(i);
            warnings.push(format!(
                "state {i} (E = {:.6}) has relative amplitude {:.1e} at the box edge; widen the domain",
                pairs.values[i],
                edge / peak
            ));
        }
    }

    Ok(Spectrum {
        spec: *spec,
        grid: grid.clone(),
        energies: pairs.values,
        states,
        discretization_errors,
        bound,
        bound_count,
        contaminated,
        warnings,
    })
}

/// Solve for every level below zero plus the first level above it.
pub fn solve_bound_states(spec: &PotentialSpec, grid: &Grid) -> Result<Spectrum> {
    let op = build_hamiltonian(spec, grid)?;
    let n = (sturm_count(&op, 0.0) + 1).min(grid.dim());
    solve_schrodinger(spec, grid, n)
}
