//! Gaussian trial function against the numerical ground state.

use qwell::discretize::default_grid;
use qwell::eigensolve::solve_schrodinger;
use qwell::variational::{expectation_h, solve_optimal_b};
use qwell::PotentialSpec;

fn main() -> qwell::Result<()> {
    println!("{:>5} {:>5} {:>10} {:>10} {:>10}", "v0", "alpha", "b*", "<H>", "E0");
    for (v0, alpha) in [(1.0, 1.0), (2.5, 0.5), (3.0, 1.0), (3.0, 0.1)] {
        let r = solve_optimal_b(v0, alpha)?;
        let spec = PotentialSpec::gaussian_well(v0, alpha)?;
        let e0 = solve_schrodinger(&spec, &default_grid(&spec)?, 1)?.energies[0];
        println!("{v0:>5} {alpha:>5} {:>10.6} {:>10.6} {:>10.6}", r.b_star, r.energy_bound, e0);
    }

    // <H>(b) around the optimum for v0 = alpha = 1
    let best = solve_optimal_b(1.0, 1.0)?.b_star;
    for f in [0.25, 0.5, 1.0, 2.0, 4.0] {
        println!("b = {:.4}  <H> = {:.6}", f * best, expectation_h(f * best, 1.0, 1.0)?);
    }
    Ok(())
}
