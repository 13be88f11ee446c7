//! Acceptance checks. Prints one PASS/FAIL line per criterion.
//!
//! Run with `cargo test --test acceptance`. The process exits nonzero when a
//! criterion fails, except for the ones listed in [`KNOWN_UNATTAINABLE`],
//! which are still evaluated and reported as FAIL.

mod common;

use std::f64::consts::PI;
use std::process::Command;

use qwell::analysis::{double_well_report, Parity};
use qwell::discretize::{default_grid, Grid, TridiagonalOperator};
use qwell::eigensolve::{eigen_range, solve_bound_states, solve_schrodinger};
use qwell::semiclassical::{stm_estimate, transmission, transmission_at_beta, wkb_count};
use qwell::variational::solve_optimal_b;
use qwell::PotentialSpec;

/// 2: for (1, 1) the optimal Gaussian bound -0.467154 and the converged ground
///    energy -0.477390 differ by 2.14%, so the 2% gap does not hold there.
/// 9: the double-well splitting is not monotone in v0 at alpha = 1; it peaks
///    near v0 = 4, so ΔE(5) > ΔE(3) on any converged grid.
const KNOWN_UNATTAINABLE: &[usize] = &[2, 9];

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn err(e: impl std::fmt::Display) -> String {
    e.to_string()
}

const GROUND_ROWS: [(f64, f64, f64, f64, f64); 4] = [
    (1.0, 1.0, 0.3742, -0.4671, -0.4774),
    (2.5, 0.5, 0.6113, -1.8005, -1.8038),
    (3.0, 1.0, 0.8717, -1.9557, -1.9637),
    (3.0, 0.1, 0.3504, -2.6312, -2.6316),
];

fn ground_energy(v0: f64, alpha: f64) -> Result<f64, String> {
    let spec = PotentialSpec::gaussian_well(v0, alpha).map_err(err)?;
    let grid = default_grid(&spec).map_err(err)?;
    Ok(solve_schrodinger(&spec, &grid, 1).map_err(err)?.energies[0])
}

fn ground_state_table() -> Outcome {
    let mut detail = Vec::new();
    for (v0, alpha, b, h, e0) in GROUND_ROWS {
        let r = solve_optimal_b(v0, alpha).map_err(err)?;
        let e = ground_energy(v0, alpha)?;
        ensure((r.b_star - b).abs() <= 1e-3, format!("({v0},{alpha}) b* = {}", r.b_star))?;
        ensure((r.energy_bound - h).abs() <= 1e-3, format!("({v0},{alpha}) <H> = {}", r.energy_bound))?;
        ensure((e - e0).abs() <= 1e-3, format!("({v0},{alpha}) E0 = {e}"))?;
        detail.push(format!("({v0},{alpha}): b*={:.4} <H>={:.4} E0={e:.4}", r.b_star, r.energy_bound));
    }
    Ok(detail.join("; "))
}

fn variational_dominance() -> Outcome {
    let mut gaps = Vec::new();
    let mut violations = Vec::new();
    for (v0, alpha, ..) in GROUND_ROWS {
        let h = solve_optimal_b(v0, alpha).map_err(err)?.energy_bound;
        let e = ground_energy(v0, alpha)?;
        ensure(h >= e, format!("({v0},{alpha}) <H> = {h} < E0 = {e}"))?;
        let gap = (h - e) / e.abs();
        gaps.push(format!("({v0},{alpha}) {:.3}%", 100.0 * gap));
        if gap > 0.02 {
            violations.push(format!("({v0},{alpha}) gap {:.3}% > 2%", 100.0 * gap));
        }
    }
    ensure(violations.is_empty(), format!("{}; all gaps: {}", violations.join(", "), gaps.join(", ")))?;
    Ok(format!("relative gaps {}", gaps.join(", ")))
}

fn level_count_table() -> Outcome {
    let rows = [(0.5, 1.3, 1), (1.0, 1.6, 1), (10.0, 4.1, 4), (100.0, 11.8, 11)];
    let mut detail = Vec::new();
    for (v0, n_real, n) in rows {
        let w = wkb_count(v0, 1.0).map_err(err)?;
        ensure((w.n_real - n_real).abs() <= 0.05, format!("v0={v0} n_real = {}", w.n_real))?;
        ensure(w.n_levels == n, format!("v0={v0} floor = {}", w.n_levels))?;
        let spec = PotentialSpec::gaussian_well(v0, 1.0).map_err(err)?;
        let s = solve_bound_states(&spec, &default_grid(&spec).map_err(err)?).map_err(err)?;
        ensure(s.bound_count == n as usize, format!("v0={v0} numerical count = {}", s.bound_count))?;
        detail.push(format!("{v0}: {:.3}/{}", w.n_real, s.bound_count));
    }
    Ok(detail.join(", "))
}

fn eigensolver_oracle() -> Outcome {
    let mut worst_value = 0.0f64;
    let mut worst_residual = 0.0f64;
    for (diag, off) in common::random_tridiagonals(50, 20240611) {
        let n = diag.len();
        let op = TridiagonalOperator::new(diag.clone(), off.clone()).map_err(err)?;
        let pairs = eigen_range(&op, n).map_err(err)?;
        let oracle = common::jacobi_eigenvalues(common::dense(&diag, &off));
        let norm = op.norm();
        for (j, (&got, &want)) in pairs.values.iter().zip(&oracle).enumerate() {
            worst_value = worst_value.max((got - want).abs());
            let av = op.apply(&pairs.vectors[j]);
            let res = av.iter().zip(&pairs.vectors[j]).map(|(a, v)| (a - got * v).powi(2)).sum::<f64>().sqrt();
            worst_residual = worst_residual.max(res / norm.max(f64::MIN_POSITIVE));
        }
    }
    ensure(worst_value <= 1e-10, format!("eigenvalue deviation {worst_value:e}"))?;
    ensure(worst_residual <= 1e-8, format!("relative residual {worst_residual:e}"))?;

    // free particle on r = 20 intervals: δ⁻²(1 - cos(kπ/r))
    let (r, len) = (20usize, 2.0);
    let delta = len / r as f64;
    let n = r - 1;
    let op = TridiagonalOperator::new(vec![1.0 / (delta * delta); n], vec![-0.5 / (delta * delta); n - 1])
        .map_err(err)?;
    let pairs = eigen_range(&op, n).map_err(err)?;
    let mut worst_mode = 0.0f64;
    for (k, got) in pairs.values.iter().enumerate() {
        let want = (1.0 - ((k + 1) as f64 * PI / r as f64).cos()) / (delta * delta);
        worst_mode = worst_mode.max((got - want).abs());
    }
    ensure(worst_mode <= 1e-10, format!("free-particle deviation {worst_mode:e}"))?;
    Ok(format!(
        "max |dλ| {worst_value:.1e}, max residual/|A| {worst_residual:.1e}, free modes {worst_mode:.1e}"
    ))
}

fn discretization_order() -> Outcome {
    let spec = PotentialSpec::gaussian_well(1.0, 1.0).map_err(err)?;
    let energy = |r: usize| -> Result<f64, String> {
        let grid = Grid::new(-12.0, 12.0, r).map_err(err)?;
        Ok(solve_schrodinger(&spec, &grid, 1).map_err(err)?.energies[0])
    };
    let (e1, e2, e4) = (energy(400)?, energy(800)?, energy(1600)?);
    let reference = (4.0 * e4 - e2) / 3.0;
    let ratio = (e1 - reference) / (e2 - reference);
    ensure((3.5..=4.5).contains(&ratio), format!("error ratio {ratio}"))?;
    Ok(format!("error ratio r=400/800: {ratio:.4}"))
}

fn spectral_structure() -> Outcome {
    let mut detail = Vec::new();
    for (v0, alpha) in [(3.0, 0.1), (100.0, 1.0)] {
        let spec = PotentialSpec::gaussian_well(v0, alpha).map_err(err)?;
        let s = solve_bound_states(&spec, &default_grid(&spec).map_err(err)?).map_err(err)?;
        let delta = s.grid.delta();
        for d in s.descriptors().iter().filter(|d| d.bound) {
            ensure(d.nodes == d.index, format!("({v0},{alpha}) state {} has {} nodes", d.index, d.nodes))?;
            let want = if d.index % 2 == 0 { Parity::Even } else { Parity::Odd };
            ensure(d.parity == want, format!("({v0},{alpha}) state {} parity {:?}", d.index, d.parity))?;
        }
        let mut worst = 0.0f64;
        for i in 0..s.len() {
            for j in 0..s.len() {
                let overlap: f64 = delta * s.states[i].iter().zip(&s.states[j]).map(|(a, b)| a * b).sum::<f64>();
                let dev = if i == j { (overlap - 1.0).abs() } else { overlap.abs() };
                worst = worst.max(dev);
            }
        }
        ensure(worst <= 1e-8, format!("({v0},{alpha}) overlap deviation {worst:e}"))?;
        detail.push(format!("({v0},{alpha}): {} bound states, overlap dev {worst:.1e}", s.bound_count));
    }
    Ok(detail.join("; "))
}

fn transmission_properties() -> Outcome {
    let (v0, alpha) = (2.0, 1.0);
    let edge = transmission_at_beta(v0, alpha, 1.0 + 1e-12).map_err(err)?;
    ensure((edge.t_exact - 1.0).abs() <= 1e-4, format!("t_exact(β→1) = {}", edge.t_exact))?;
    ensure((edge.t_approx - 1.0).abs() <= 1e-4, format!("t_approx(β→1) = {}", edge.t_approx))?;

    let betas = [1.01, 1.5, 2.0, 3.0, 4.0, 5.0];
    let mut previous: Option<(f64, f64)> = None;
    let mut worst_scale = 0.0f64;
    for beta in betas {
        let t = transmission_at_beta(v0, alpha, beta).map_err(err)?;
        if let Some((pe, pa)) = previous {
            ensure(t.t_exact <= pe, format!("t_exact increases at β = {beta}"))?;
            ensure(t.t_approx <= pa, format!("t_approx increases at β = {beta}"))?;
        }
        ensure(t.theta_exact <= t.theta_approx, format!("θ_exact > θ_approx at β = {beta}"))?;
        previous = Some((t.t_exact, t.t_approx));

        let e = v0 / beta;
        let scaled = transmission(4.0 * v0, 4.0 * alpha, 4.0 * e).map_err(err)?;
        worst_scale = worst_scale.max((scaled.t_exact - t.t_exact).abs());
    }
    ensure(worst_scale <= 1e-8, format!("scaling deviation {worst_scale:e}"))?;
    Ok(format!(
        "T(1+1e-12) = {:.8}/{:.8}, scaling dev {worst_scale:.1e}",
        edge.t_exact, edge.t_approx
    ))
}

fn stm_example() -> Outcome {
    let near = stm_estimate(2.883).map_err(err)?;
    let far = stm_estimate(128.6).map_err(err)?;
    ensure((near - 0.024).abs() <= 1e-3, format!("formula(2.883) = {near}"))?;
    ensure(far.log10().floor() == -11.0, format!("formula(128.6) = {far:e}"))?;
    let own = |ratio: f64| transmission_at_beta(ratio, 1.0, 2.0).map_err(err);
    let (a, b) = (own(2.883)?, own(128.6)?);
    Ok(format!(
        "formula {near:.4} / {far:.2e}; quadrature t_exact {:.4e} / {:.2e}, t_approx {:.4e} / {:.2e}",
        a.t_exact, b.t_exact, a.t_approx, b.t_approx
    ))
}

fn double_well_properties() -> Outcome {
    let (r3, _) = double_well_report(3.0, 1.0, None).map_err(err)?;
    let (r5, _) = double_well_report(5.0, 1.0, None).map_err(err)?;
    let (r10, _) = double_well_report(10.0, 1.0, None).map_err(err)?;
    let splittings = format!("ΔE(3) = {:.6}, ΔE(5) = {:.6}, ΔE(10) = {:.6}", r3.delta_e, r5.delta_e, r10.delta_e);

    for (v0, r) in [(3.0, r3), (5.0, r5), (10.0, r10)] {
        let (_, s) = double_well_report(v0, 1.0, None).map_err(err)?;
        let d = s.descriptors();
        ensure(
            (d[0].parity, d[1].parity) == (Parity::Even, Parity::Odd),
            format!("v0={v0} parities {:?}, {:?}", d[0].parity, d[1].parity),
        )?;
        let ground = &s.states[0];
        let peak = ground.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        let centre = s
            .grid
            .points()
            .iter()
            .zip(ground)
            .filter(|(x, _)| x.abs() < 1.0)
            .fold(0.0f64, |m, (_, p)| m.max(p.abs()));
        ensure(centre > 1e-6 * peak, format!("v0={v0} no ground amplitude in |x| < 1"))?;
        ensure((r.period * r.delta_e - 2.0 * PI).abs() <= 1e-10, format!("v0={v0} τΔE ≠ 2π"))?;
    }
    ensure(r10.delta_e < r5.delta_e && r5.delta_e < r3.delta_e, format!("not ordered: {splittings}"))?;
    Ok(splittings)
}

fn radial_consistency() -> Outcome {
    let (v0, alpha) = (3.0, 0.1);
    let radial = PotentialSpec::half_gaussian(v0, alpha, 0).map_err(err)?;
    let r = solve_schrodinger(&radial, &default_grid(&radial).map_err(err)?, 1).map_err(err)?;
    let full = PotentialSpec::gaussian_well(v0, alpha).map_err(err)?;
    let f = solve_schrodinger(&full, &default_grid(&full).map_err(err)?, 4).map_err(err)?;
    let odd = f
        .descriptors()
        .into_iter()
        .find(|d| d.parity == Parity::Odd)
        .ok_or("no odd full-line level")?;
    let diff = (r.energies[0] - odd.energy).abs();
    ensure(diff <= 1e-4, format!("radial {} vs odd {}", r.energies[0], odd.energy))?;
    Ok(format!("radial {:.8}, odd {:.8}, diff {diff:.1e}", r.energies[0], odd.energy))
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_qwell");
    let runs: [&[&str]; 6] = [
        &["solve", "--kind", "gaussian-well", "--v0", "3", "--alpha", "0.1"],
        &["solve", "--kind", "half-gaussian", "--v0", "3", "--alpha", "0.1", "--format", "csv"],
        &["compare", "--preset", "ground-states"],
        &["transmit", "--v0", "2", "--alpha", "1", "--beta-range", "1.01:5:9", "--stm"],
        &["doublewell", "--v0", "10", "--alpha", "1"],
        &["doublewell", "--v0", "10", "--alpha", "1", "--format", "csv", "--wavefunctions"],
    ];
    for args in runs {
        let run = || {
            Command::new(bin)
                .args(args)
                .env("QWELL_THREADS", "4")
                .output()
                .map_err(err)
        };
        let (a, b) = (run()?, run()?);
        ensure(a.status.success(), format!("{args:?} exited with {}", a.status))?;
        ensure(a.stdout == b.stdout, format!("{args:?} output differs between runs"))?;
    }
    Ok(format!("{} commands byte-identical", runs.len()))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 11] = [
        ("ground-state table", ground_state_table),
        ("variational dominance", variational_dominance),
        ("level-count table", level_count_table),
        ("eigensolver oracle", eigensolver_oracle),
        ("discretization order", discretization_order),
        ("spectral structure", spectral_structure),
        ("transmission properties", transmission_properties),
        ("tunneling-gap estimate", stm_example),
        ("double-well properties", double_well_properties),
        ("radial consistency", radial_consistency),
        ("determinism", determinism),
    ];
    let mut unexpected = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let number = i + 1;
        match check() {
            Ok(detail) => println!("PASS {number:>2} {name}: {detail}"),
            Err(why) => {
                let known = KNOWN_UNATTAINABLE.contains(&number);
                let tag = if known { " [known]" } else { "" };
                println!("FAIL {number:>2} {name}{tag}: {why}");
                if !known {
                    unexpected += 1;
                }
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
