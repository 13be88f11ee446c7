//! One-dimensional quantum spectral toolkit for Gaussian-family potentials.
//!
//! All quantities use natural units (ħ = m = 1). The crate is organized as:
//!
//! - [`potential`]: the Gaussian well, barrier, double well and radial half-well.
//! - [`numerics`]: bisection, adaptive Simpson quadrature and `erf`.
//! - [`discretize`]: uniform grids and the three-point finite-difference Hamiltonian.
//! - [`eigensolve`]: Sturm bisection + inverse iteration for symmetric tridiagonal
//!   matrices, and [`eigensolve::solve_schrodinger`].
//! - [`variational`]: the Gaussian trial-function upper bound.
//! - [`semiclassical`]: WKB level counting, quantization and barrier transmission.
//! - [`analysis`]: nodes, parity, and double-well splitting.
//! - [`cli`]: report generation behind the `qwell` binary.
//!
//! ```
//! use qwell::{PotentialSpec, discretize, eigensolve};
//!
//! let spec = PotentialSpec::gaussian_well(1.0, 1.0).unwrap();
//! let grid = discretize::default_grid(&spec).unwrap();
//! let spectrum = eigensolve::solve_schrodinger(&spec, &grid, 2).unwrap();
//! assert!((spectrum.energies[0] + 0.4774).abs() < 1e-3);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod cli;
pub mod discretize;
pub mod eigensolve;
mod error;
pub mod numerics;
pub mod potential;
pub mod semiclassical;
pub mod variational;

pub use analysis::{DoubleWellReport, Parity, StateDescriptor};
pub use discretize::{Grid, TridiagonalOperator};
pub use eigensolve::Spectrum;
pub use error::{Error, Result};
pub use potential::{PotentialKind, PotentialSpec};
pub use semiclassical::{TransmissionResult, WkbCount};
pub use variational::VariationalResult;
