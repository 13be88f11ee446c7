//! Post-processing of spectra: node counts, parity, and the double-well
//! splitting.

use std::f64::consts::PI;

use serde::Serialize;

use crate::discretize::{default_grid, Grid};
use crate::eigensolve::{solve_schrodinger, Spectrum};
use crate::error::{Error, Result};
use crate::potential::PotentialSpec;

/// Samples below this fraction of `max|ψ|` are treated as noise.
pub const NODE_THRESHOLD: f64 = 1e-6;
/// Relative tolerance of the mirror-symmetry test.
pub const PARITY_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Parity {
    Even,
    Odd,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct StateDescriptor {
    pub index: usize,
    pub energy: f64,
    pub nodes: usize,
    pub parity: Parity,
    pub bound: bool,
}

/// Lowest levels of the double Gaussian well and derived two-level data.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DoubleWellReport {
    pub e1: f64,
    pub e2: f64,
    pub e3: Option<f64>,
    pub delta_e: f64,
    /// `2π / ΔE`
    pub period: f64,
    /// `(e2 - e1) / (e3 - e2)`
    pub decoupling_ratio: Option<f64>,
}

fn peak(state: &[f64]) -> f64 {
    state.iter().fold(0.0f64, |m, x| m.max(x.abs()))
}

/// Sign changes between consecutive significant samples. Samples with
/// `|ψ| <= 1e-6 max|ψ|` are skipped, so a node that falls exactly on a grid
/// point is still counted once and tail noise is ignored.
pub fn count_nodes(state: &[f64]) -> usize {
    let threshold = NODE_THRESHOLD * peak(state);
    let mut last_sign = None;
    let mut nodes = 0;
    for &x in state.iter().filter(|x| x.abs() > threshold) {
        let sign = x > 0.0;
        if last_sign.is_some_and(|s| s != sign) {
            nodes += 1;
        }
        last_sign = Some(sign);
    }
    nodes
}

/// Mirror-symmetry class of `state` on a grid symmetric about `x = 0`.
pub fn classify_parity(state: &[f64], grid: &Grid) -> Result<Parity> {
    if !grid.is_symmetric() || state.len() != grid.dim() {
        return Err(Error::AsymmetricGrid);
    }
    let tol = PARITY_TOLERANCE * peak(state);
    let pairs = state.iter().zip(state.iter().rev());
    let (mut even_dev, mut odd_dev) = (0.0f64, 0.0f64);
    for (a, b) in pairs {
        even_dev = even_dev.max((a - b).abs());
        odd_dev = odd_dev.max((a + b).abs());
    }
    Ok(if even_dev <= tol {
        Parity::Even
    } else if odd_dev <= tol {
        Parity::Odd
    } else {
        Parity::None
    })
}

impl Spectrum {
    /// Per-state summary. Parity is `None` unless both the potential and the
    /// grid are mirror symmetric.
    pub fn descriptors(&self) -> Vec<StateDescriptor> {
        let symmetric = self.spec.kind().is_full_line() && self.grid.is_symmetric();
        self.states
            .iter()
            .enumerate()
            .map(|(index, state)| StateDescriptor {
                index,
                energy: self.energies[index],
                nodes: count_nodes(state),
                parity: if symmetric {
                    classify_parity(state, &self.grid).unwrap_or(Parity::None)
                } else {
                    Parity::None
                },
                bound: self.bound[index],
            })
            .collect()
    }
}

impl DoubleWellReport {
    /// Build the report from the lowest energies of a spectrum.
    pub fn from_energies(energies: &[f64]) -> Result<Self> {
        if energies.len() < 2 {
            return Err(Error::InsufficientBoundStates { needed: 2, found: energies.len() });
        }
        let (e1, e2) = (energies[0], energies[1]);
        let delta_e = e2 - e1;
        let e3 = energies.get(2).copied();
        Ok(Self {
            e1,
            e2,
            e3,
            delta_e,
            period: 2.0 * PI / delta_e,
            decoupling_ratio: e3.map(|e3| delta_e / (e3 - e2)),
        })
    }
}

/// Solve the double Gaussian well and report its lowest doublet. `grid`
/// defaults to [`default_grid`]. The decoupling ratio is filled only when a
/// third bound level exists.
pub fn double_well_report(v0: f64, alpha: f64, grid: Option<&Grid>) -> Result<(DoubleWellReport, Spectrum)> {
    let spec = PotentialSpec::double_well(v0, alpha)?;
    let owned;
    let grid = match grid {
        Some(g) => g,
        None => {
            owned = default_grid(&spec)?;
            &owned
        }
    };
    let spectrum = solve_schrodinger(&spec, grid, 3.min(grid.dim()))?;
    if spectrum.bound_count < 2 {
        return Err(Error::InsufficientBoundStates { needed: 2, found: spectrum.bound_count });
    }
    let bound: Vec<f64> = spectrum
        .energies
        .iter()
        .zip(&spectrum.bound)
        .filter(|(_, &b)| b)
        .map(|(&e, _)| e)
        .collect();
    Ok((DoubleWellReport::from_energies(&bound)?, spectrum))
}
