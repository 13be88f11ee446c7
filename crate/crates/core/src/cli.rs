//! Command-line front end: argument model, report generation and encoding.
//!
//! Every subcommand produces a [`Report`] that encodes to JSON
//! (`{params, grid, results, warnings}`) or CSV (header row plus data rows).
//! Numbers are rounded to 12 significant digits before encoding so both
//! formats carry identical values.

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::analysis::{DoubleWellReport, Parity};
use crate::discretize::{default_domain, Grid};
use crate::eigensolve::{solve_bound_states, solve_schrodinger, Spectrum};
use crate::potential::{PotentialKind, PotentialSpec};
use crate::semiclassical::{stm_estimate, transmission, uncertainty_tunneling_condition, wkb_count};
use crate::variational::solve_optimal_b;

/// Environment variable capping sweep parallelism; `0` runs serially.
pub const THREADS_ENV: &str = "QWELL_THREADS";

#[derive(Debug, Parser)]
#[command(name = "qwell", version, about = "Spectra, WKB estimates and tunneling for Gaussian-family potentials")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Solve for levels and eigenfunctions of one potential.
    Solve(Options),
    /// Compare variational, WKB and numerical results over (v0, alpha) points.
    Compare(Options),
    /// WKB transmission through the Gaussian barrier.
    Transmit(Options),
    /// Lowest doublet of the double Gaussian well.
    Doublewell(Options),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Solve(_) => "solve",
            Command::Compare(_) => "compare",
            Command::Transmit(_) => "transmit",
            Command::Doublewell(_) => "doublewell",
        }
    }

    pub fn options(&self) -> &Options {
        match self {
            Command::Solve(o) | Command::Compare(o) | Command::Transmit(o) | Command::Doublewell(o) => o,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum KindArg {
    GaussianWell,
    GaussianBarrier,
    #[value(alias = "double-gaussian-well")]
    #[serde(alias = "double-gaussian-well")]
    DoubleWell,
    #[value(alias = "half-gaussian-radial")]
    #[serde(alias = "half-gaussian-radial")]
    HalfGaussian,
}

impl From<KindArg> for PotentialKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::GaussianWell => PotentialKind::GaussianWell,
            KindArg::GaussianBarrier => PotentialKind::GaussianBarrier,
            KindArg::DoubleWell => PotentialKind::DoubleGaussianWell,
            KindArg::HalfGaussian => PotentialKind::HalfGaussianRadial,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Json,
    Csv,
}

/// Built-in parameter sets for `compare`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    /// (v0, alpha) = (1,1), (2.5,0.5), (3,1), (3,0.1)
    GroundStates,
    /// v0/alpha = 0.5, 1, 10, 100 at alpha = 1
    LevelCounts,
}

/// Flags shared by every subcommand. A JSON file given with `--config` may
/// set any of them using the long flag name as key; flags win over the file.
#[derive(Debug, Clone, Default, PartialEq, Args, Deserialize)]
#[serde(rename_all = "kebab-case", deny_unknown_fields, default)]
pub struct Options {
    /// Potential kind.
    #[arg(long, value_enum)]
    pub kind: Option<KindArg>,
    /// Depth (well) or height (barrier).
    #[arg(long)]
    pub v0: Option<f64>,
    /// Gaussian exponent.
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Particle energy (transmit).
    #[arg(long)]
    pub e: Option<f64>,
    /// Ratio v0/E (transmit).
    #[arg(long)]
    pub beta: Option<f64>,
    /// Angular momentum of the radial potential.
    #[arg(long)]
    pub l: Option<u32>,
    #[arg(long)]
    pub xmin: Option<f64>,
    #[arg(long)]
    pub xmax: Option<f64>,
    /// Number of mesh intervals.
    #[arg(long)]
    pub mesh: Option<usize>,
    /// Number of levels to compute.
    #[arg(long)]
    pub states: Option<usize>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// JSON file with default values for any of these flags.
    #[arg(long)]
    #[serde(skip)]
    pub config: Option<PathBuf>,
    /// Include the closed-form STM estimate (transmit).
    #[arg(long)]
    pub stm: bool,
    /// Barrier v0/alpha for transmit when v0 and alpha are not given.
    #[arg(long = "v0-over-alpha")]
    pub v0_over_alpha: Option<f64>,
    /// Comma-separated v0 values (compare).
    #[arg(long = "v0-list", value_delimiter = ',')]
    pub v0_list: Option<Vec<f64>>,
    /// Comma-separated alpha values, one per v0 or a single shared value (compare).
    #[arg(long = "alpha-list", value_delimiter = ',')]
    pub alpha_list: Option<Vec<f64>>,
    /// Beta sweep `lo:hi:n`, n points inclusive (transmit).
    #[arg(long = "beta-range")]
    pub beta_range: Option<String>,
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    /// Emit wavefunction columns (x, psi_i + E_i); CSV output switches to them.
    #[arg(long)]
    pub wavefunctions: bool,
}

impl Options {
    /// Fill unset fields from `file`.
    pub fn merged_with(self, file: Options) -> Options {
        Options {
            kind: self.kind.or(file.kind),
            v0: self.v0.or(file.v0),
            alpha: self.alpha.or(file.alpha),
            e: self.e.or(file.e),
            beta: self.beta.or(file.beta),
            l: self.l.or(file.l),
            xmin: self.xmin.or(file.xmin),
            xmax: self.xmax.or(file.xmax),
            mesh: self.mesh.or(file.mesh),
            states: self.states.or(file.states),
            format: self.format.or(file.format),
            output: self.output.or(file.output),
            config: self.config,
            stm: self.stm || file.stm,
            v0_over_alpha: self.v0_over_alpha.or(file.v0_over_alpha),
            v0_list: self.v0_list.or(file.v0_list),
            alpha_list: self.alpha_list.or(file.alpha_list),
            beta_range: self.beta_range.or(file.beta_range),
            preset: self.preset.or(file.preset),
            wavefunctions: self.wavefunctions || file.wavefunctions,
        }
    }
}

/// Failure of a CLI run, carrying its exit status.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Numerical(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Numerical(_) => 3,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        if e.is_numerical() {
            CliError::Numerical(e.to_string())
        } else {
            CliError::Usage(e.to_string())
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i64),
    Num(f64),
    Text(String),
    Bool(bool),
}

impl From<f64> for Cell {
    fn from(v: f64) -> Self {
        Cell::Num(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(v as i64)
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    fn new(columns: &[&str]) -> Self {
        Self { columns: columns.iter().map(|c| c.to_string()).collect(), rows: Vec::new() }
    }
}

/// Round to 12 significant digits.
pub fn round_sig(v: f64) -> f64 {
    if v == 0.0 || !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().unwrap_or(v)
}

fn num_value(v: f64) -> CliResult<Value> {
    if !v.is_finite() {
        return Err(CliError::Numerical(format!("non-finite value {v} in report")));
    }
    Ok(json!(round_sig(v)))
}

fn cell_value(c: &Cell) -> CliResult<Value> {
    Ok(match c {
        Cell::Int(i) => json!(i),
        Cell::Num(v) => num_value(*v)?,
        Cell::Text(s) => json!(s),
        Cell::Bool(b) => json!(b),
    })
}

fn cell_csv(c: &Cell) -> CliResult<String> {
    Ok(match c {
        Cell::Int(i) => i.to_string(),
        Cell::Num(v) => {
            if !v.is_finite() {
                return Err(CliError::Numerical(format!("non-finite value {v} in report")));
            }
            round_sig(*v).to_string()
        }
        Cell::Text(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
        Cell::Text(s) => s.clone(),
        Cell::Bool(b) => b.to_string(),
    })
}

/// Output of one CLI run.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Report {
    pub params: Vec<(String, Cell)>,
    pub grid: Option<Grid>,
    pub summary: Vec<(String, Cell)>,
    pub table: Table,
    pub wavefunctions: Option<Table>,
    /// CSV encodes the wavefunction table instead of the main table.
    pub csv_wavefunctions: bool,
    pub warnings: Vec<String>,
}

impl Report {
    fn map(entries: &[(String, Cell)]) -> CliResult<Value> {
        let mut m = Map::new();
        for (k, c) in entries {
            m.insert(k.clone(), cell_value(c)?);
        }
        Ok(Value::Object(m))
    }

    pub fn to_json_value(&self) -> CliResult<Value> {
        let grid = match &self.grid {
            Some(g) => json!({
                "x_min": num_value(g.x_min())?,
                "x_max": num_value(g.x_max())?,
                "mesh": g.r(),
                "delta": num_value(g.delta())?,
            }),
            None => Value::Null,
        };
        let mut records = Vec::with_capacity(self.table.rows.len());
        for row in &self.table.rows {
            let mut m = Map::new();
            for (col, c) in self.table.columns.iter().zip(row) {
                m.insert(col.clone(), cell_value(c)?);
            }
            records.push(Value::Object(m));
        }
        let mut results = Map::new();
        results.insert("summary".into(), Self::map(&self.summary)?);
        results.insert("table".into(), Value::Array(records));
        if let Some(w) = &self.wavefunctions {
            let rows = w
                .rows
                .iter()
                .map(|r| r.iter().map(cell_value).collect::<CliResult<Vec<_>>>().map(Value::Array))
                .collect::<CliResult<Vec<_>>>()?;
            results.insert("wavefunctions".into(), json!({ "columns": w.columns, "rows": rows }));
        }
        Ok(json!({
            "params": Self::map(&self.params)?,
            "grid": grid,
            "results": Value::Object(results),
            "warnings": self.warnings,
        }))
    }

    pub fn to_json(&self) -> CliResult<String> {
        let mut s = serde_json::to_string_pretty(&self.to_json_value()?)
            .map_err(|e| CliError::Numerical(e.to_string()))?;
        s.push('\n');
        Ok(s)
    }

    pub fn to_csv(&self) -> CliResult<String> {
        let table = match (&self.wavefunctions, self.csv_wavefunctions) {
            (Some(w), true) => w,
            _ => &self.table,
        };
        let mut out = String::new();
        out.push_str(&table.columns.join(","));
        out.push('\n');
        for row in &table.rows {
            let cells = row.iter().map(cell_csv).collect::<CliResult<Vec<_>>>()?;
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        Ok(out)
    }

    pub fn encode(&self, format: Format) -> CliResult<String> {
        match format {
            Format::Json => self.to_json(),
            Format::Csv => self.to_csv(),
        }
    }
}

/// Run `items` through `f`, in parallel unless [`THREADS_ENV`] is `0`.
/// Results keep input order.
fn sweep<T, R, F>(items: &[T], f: F) -> CliResult<Vec<R>>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> CliResult<R> + Sync + Send,
{
    let threads = std::env::var(THREADS_ENV).ok().and_then(|v| v.trim().parse::<usize>().ok());
    match threads {
        Some(0) => items.iter().map(f).collect(),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .map_err(|e| CliError::Numerical(e.to_string()))?
            .install(|| items.par_iter().map(&f).collect()),
        None => items.par_iter().map(&f).collect(),
    }
}

fn require(name: &str, v: Option<f64>) -> CliResult<f64> {
    v.ok_or_else(|| usage(format!("--{name} is required")))
}

fn grid_for(spec: &PotentialSpec, opts: &Options) -> CliResult<Grid> {
    let (lo, hi, r) = default_domain(spec);
    let lo = opts.xmin.unwrap_or(lo);
    let hi = opts.xmax.unwrap_or(hi);
    let r = opts.mesh.unwrap_or(r);
    Ok(Grid::new(lo, hi, r)?)
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
        Parity::None => "none",
    }
}

fn state_table(spectrum: &Spectrum) -> Table {
    let mut t = Table::new(&["index", "energy", "nodes", "parity", "bound", "discretization_error"]);
    for d in spectrum.descriptors() {
        t.rows.push(vec![
            d.index.into(),
            d.energy.into(),
            d.nodes.into(),
            parity_name(d.parity).into(),
            d.bound.into(),
            spectrum.discretization_errors[d.index].into(),
        ]);
    }
    t
}

/// Columns `x, psi_i + E_i` for the first `count` states.
fn wavefunction_table(spectrum: &Spectrum, count: usize) -> Table {
    let count = count.min(spectrum.len());
    let mut columns = vec!["x".to_string()];
    columns.extend((0..count).map(|i| format!("psi{i}+E{i}")));
    let rows = spectrum
        .grid
        .points()
        .iter()
        .enumerate()
        .map(|(k, &x)| {
            let mut row = vec![Cell::Num(x)];
            row.extend((0..count).map(|i| Cell::Num(spectrum.states[i][k] + spectrum.energies[i])));
            row
        })
        .collect();
    Table { columns, rows }
}

fn spec_params(spec: &PotentialSpec) -> Vec<(String, Cell)> {
    let mut p = vec![
        ("kind".into(), spec.kind().name().into()),
        ("v0".into(), spec.v0().into()),
        ("alpha".into(), spec.alpha().into()),
    ];
    if spec.kind() == PotentialKind::HalfGaussianRadial {
        p.push(("l".into(), (spec.l() as usize).into()));
    }
    p
}

pub fn cmd_solve(opts: &Options) -> CliResult<Report> {
    let kind: PotentialKind = opts.kind.unwrap_or(KindArg::GaussianWell).into();
    let spec = PotentialSpec::new(kind, require("v0", opts.v0)?, require("alpha", opts.alpha)?, opts.l.unwrap_or(0))?;
    let grid = grid_for(&spec, opts)?;
    let spectrum = match opts.states {
        Some(n) => solve_schrodinger(&spec, &grid, n)?,
        None => solve_bound_states(&spec, &grid)?,
    };

    let mut summary = vec![
        ("bound_count".into(), spectrum.bound_count.into()),
        ("ground_energy".into(), spectrum.energies[0].into()),
    ];
    if kind.is_full_line() {
        summary.push(("integral_over_line".into(), spec.integral_over_line()?.into()));
        summary.push(("bound_state_sufficient".into(), spec.bound_state_sufficient()?.into()));
    }
    if kind == PotentialKind::GaussianWell {
        let w = wkb_count(spec.v0(), spec.alpha())?;
        summary.push(("wkb_n_real".into(), w.n_real.into()));
        summary.push(("wkb_n_levels".into(), (w.n_levels as usize).into()));
    }

    let mut params = spec_params(&spec);
    params.push(("states".into(), spectrum.len().into()));
    Ok(Report {
        params,
        grid: Some(grid),
        summary,
        table: state_table(&spectrum),
        wavefunctions: opts.wavefunctions.then(|| wavefunction_table(&spectrum, spectrum.len())),
        csv_wavefunctions: opts.wavefunctions,
        warnings: spectrum.warnings.clone(),
    })
}

fn compare_points(opts: &Options) -> CliResult<Vec<(f64, f64)>> {
    if let Some(preset) = opts.preset {
        return Ok(match preset {
            Preset::GroundStates => vec![(1.0, 1.0), (2.5, 0.5), (3.0, 1.0), (3.0, 0.1)],
            Preset::LevelCounts => vec![(0.5, 1.0), (1.0, 1.0), (10.0, 1.0), (100.0, 1.0)],
        });
    }
    if let Some(v0s) = &opts.v0_list {
        if v0s.is_empty() {
            return Err(usage("--v0-list is empty"));
        }
        let alphas = match (&opts.alpha_list, opts.alpha) {
            (Some(a), _) if a.len() == v0s.len() => a.clone(),
            (Some(a), _) if a.len() == 1 => vec![a[0]; v0s.len()],
            (Some(a), _) => {
                return Err(usage(format!("--alpha-list has {} values for {} v0 values", a.len(), v0s.len())))
            }
            (None, Some(a)) => vec![a; v0s.len()],
            (None, None) => return Err(usage("--alpha or --alpha-list is required")),
        };
        return Ok(v0s.iter().copied().zip(alphas).collect());
    }
    match (opts.v0, opts.alpha) {
        (Some(v0), Some(a)) => Ok(vec![(v0, a)]),
        _ => Err(usage("compare needs --preset, --v0-list, or --v0 with --alpha")),
    }
}

pub fn cmd_compare(opts: &Options) -> CliResult<Report> {
    if opts.kind.is_some_and(|k| k != KindArg::GaussianWell) {
        return Err(usage("compare only supports the gaussian-well kind"));
    }
    let points = compare_points(opts)?;
    let specs = points
        .iter()
        .map(|&(v0, a)| PotentialSpec::gaussian_well(v0, a))
        .collect::<crate::Result<Vec<_>>>()?;

    let rows = sweep(&specs, |spec| {
        let var = solve_optimal_b(spec.v0(), spec.alpha())?;
        let grid = grid_for(spec, opts)?;
        let spectrum = solve_bound_states(spec, &grid)?;
        let wkb = wkb_count(spec.v0(), spec.alpha())?;
        let e0 = spectrum.energies[0];
        let row: Vec<Cell> = vec![
            spec.v0().into(),
            spec.alpha().into(),
            var.b_star.into(),
            var.energy_bound.into(),
            e0.into(),
            ((var.energy_bound - e0) / e0.abs()).into(),
            wkb.n_real.into(),
            (wkb.n_levels as usize).into(),
            spectrum.bound_count.into(),
        ];
        Ok((row, spectrum.warnings))
    })?;

    let mut table = Table::new(&[
        "v0",
        "alpha",
        "b_star",
        "h_variational",
        "e0_numerical",
        "relative_gap",
        "n_wkb_real",
        "n_wkb",
        "n_numerical",
    ]);
    let mut warnings = Vec::new();
    for ((row, w), (v0, a)) in rows.into_iter().zip(&points) {
        table.rows.push(row);
        warnings.extend(w.into_iter().map(|w| format!("v0={v0}, alpha={a}: {w}")));
    }
    let mut params = vec![("kind".to_string(), Cell::from("gaussian-well")), ("points".into(), points.len().into())];
    if let Some(r) = opts.mesh {
        params.push(("mesh".into(), r.into()));
    }
    Ok(Report { params, table, warnings, ..Report::default() })
}

fn parse_beta_range(s: &str) -> CliResult<Vec<f64>> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || usage(format!("--beta-range expects lo:hi:n, got {s:?}"));
    if parts.len() != 3 {
        return Err(bad());
    }
    let lo: f64 = parts[0].trim().parse().map_err(|_| bad())?;
    let hi: f64 = parts[1].trim().parse().map_err(|_| bad())?;
    let n: usize = parts[2].trim().parse().map_err(|_| bad())?;
    if n == 0 || !lo.is_finite() || !hi.is_finite() {
        return Err(bad());
    }
    if n == 1 {
        return Ok(vec![lo]);
    }
    let step = (hi - lo) / (n - 1) as f64;
    Ok((0..n).map(|i| if i == n - 1 { hi } else { lo + i as f64 * step }).collect())
}

pub fn cmd_transmit(opts: &Options) -> CliResult<Report> {
    let (v0, alpha) = match (opts.v0, opts.alpha, opts.v0_over_alpha) {
        (Some(v0), Some(a), _) => (v0, a),
        (None, None, Some(ratio)) => (ratio, 1.0),
        _ => return Err(usage("transmit needs --v0 and --alpha, or --v0-over-alpha")),
    };
    if !(v0 > 0.0 && alpha > 0.0 && v0.is_finite() && alpha.is_finite()) {
        return Err(usage("v0 and alpha must be finite and > 0"));
    }

    // energies to evaluate, as (beta, e)
    let mut points: Vec<(f64, f64)> = Vec::new();
    if let Some(range) = &opts.beta_range {
        points.extend(parse_beta_range(range)?.into_iter().map(|b| (b, v0 / b)));
    }
    if let Some(b) = opts.beta {
        points.push((b, v0 / b));
    }
    if let Some(e) = opts.e {
        points.push((v0 / e, e));
    }
    if points.is_empty() {
        if !opts.stm {
            return Err(usage("transmit needs --beta, --beta-range, --e, or --stm"));
        }
        // the STM example: E = v0/2
        points.push((2.0, v0 / 2.0));
    }
    if let Some((b, _)) = points.iter().find(|(b, e)| !(*b > 1.0) || !(*e > 0.0)) {
        return Err(usage(format!("beta must be > 1, got {b}")));
    }

    let results = sweep(&points, |&(_, e)| Ok(transmission(v0, alpha, e)?))?;
    let mut table = Table::new(&[
        "beta",
        "t_exact",
        "t_approx",
        "theta_exact",
        "theta_approx",
        "uncertainty_condition",
    ]);
    for (t, &(_, e)) in results.iter().zip(&points) {
        table.rows.push(vec![
            t.beta.into(),
            t.t_exact.into(),
            t.t_approx.into(),
            t.theta_exact.into(),
            t.theta_approx.into(),
            uncertainty_tunneling_condition(v0, alpha, e)?.into(),
        ]);
    }
    let mut summary = Vec::new();
    if opts.stm {
        summary.push(("v0_over_alpha".into(), (v0 / alpha).into()));
        summary.push(("stm_formula".into(), stm_estimate(v0 / alpha)?.into()));
    }
    Ok(Report {
        params: vec![
            ("kind".into(), "gaussian-barrier".into()),
            ("v0".into(), v0.into()),
            ("alpha".into(), alpha.into()),
        ],
        summary,
        table,
        ..Report::default()
    })
}

pub fn cmd_doublewell(opts: &Options) -> CliResult<Report> {
    let spec = PotentialSpec::double_well(require("v0", opts.v0)?, require("alpha", opts.alpha)?)?;
    let grid = grid_for(&spec, opts)?;
    let n = opts.states.unwrap_or(3).max(2).min(grid.dim());
    let spectrum = solve_schrodinger(&spec, &grid, n)?;
    if spectrum.bound_count < 2 {
        return Err(CliError::Numerical(format!(
            "need at least 2 bound states, found {}",
            spectrum.bound_count
        )));
    }
    let bound: Vec<f64> = spectrum
        .energies
        .iter()
        .zip(&spectrum.bound)
        .filter(|(_, &b)| b)
        .map(|(&e, _)| e)
        .collect();
    let report = DoubleWellReport::from_energies(&bound)?;
    let descriptors = spectrum.descriptors();

    let barrier = spec.alpha().sqrt().recip();
    let ground = &spectrum.states[0];
    let peak = ground.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let inside = grid
        .points()
        .iter()
        .zip(ground)
        .filter(|(x, _)| x.abs() < barrier)
        .fold(0.0f64, |m, (_, p)| m.max(p.abs()));

    let mut summary: Vec<(String, Cell)> = vec![
        ("e1".into(), report.e1.into()),
        ("e2".into(), report.e2.into()),
        ("delta_e".into(), report.delta_e.into()),
        ("period".into(), report.period.into()),
        ("parity_1".into(), parity_name(descriptors[0].parity).into()),
        ("parity_2".into(), parity_name(descriptors[1].parity).into()),
        ("ground_barrier_amplitude".into(), (inside / peak).into()),
    ];
    if let (Some(e3), Some(ratio)) = (report.e3, report.decoupling_ratio) {
        summary.insert(2, ("e3".into(), e3.into()));
        summary.push(("decoupling_ratio".into(), ratio.into()));
    }

    let mut params = spec_params(&spec);
    params.push(("states".into(), n.into()));
    Ok(Report {
        params,
        grid: Some(grid),
        summary,
        table: state_table(&spectrum),
        wavefunctions: Some(wavefunction_table(&spectrum, 2)),
        csv_wavefunctions: opts.wavefunctions,
        warnings: spectrum.warnings.clone(),
    })
}

/// Read a JSON config file of [`Options`].
pub fn load_config(path: &Path) -> CliResult<Options> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read config {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| usage(format!("invalid config {}: {e}", path.display())))
}

/// Resolve the config file and run `command`, returning the encoded report
/// and the requested output path.
pub fn execute(command: &Command) -> CliResult<(String, Option<PathBuf>)> {
    let mut opts = command.options().clone();
    if let Some(path) = opts.config.clone() {
        opts = opts.merged_with(load_config(&path)?);
    }
    let report = match command {
        Command::Solve(_) => cmd_solve(&opts)?,
        Command::Compare(_) => cmd_compare(&opts)?,
        Command::Transmit(_) => cmd_transmit(&opts)?,
        Command::Doublewell(_) => cmd_doublewell(&opts)?,
    };
    Ok((report.encode(opts.format.unwrap_or_default())?, opts.output))
}

/// Entry point used by the binary; returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    let result = execute(&cli.command).and_then(|(text, output)| {
        match output {
            Some(path) => std::fs::write(&path, text)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display()))),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(text.as_bytes())
                    .and_then(|_| stdout.flush())
                    .map_err(|e| usage(format!("cannot write to stdout: {e}")))
            }
        }
    });
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("qwell {}: {e}", cli.command.name());
            e.exit_code()
        }
    }
}
