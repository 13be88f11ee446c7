//! s- and p-wave levels of the half-Gaussian radial well, and the odd
//! full-line level that the s-wave reproduces.

use qwell::discretize::default_grid;
use qwell::eigensolve::{solve_bound_states, solve_schrodinger};
use qwell::PotentialSpec;

fn main() -> qwell::Result<()> {
    let (v0, alpha) = (3.0, 0.1);
    for l in 0..3 {
        let spec = PotentialSpec::half_gaussian(v0, alpha, l)?;
        let s = solve_bound_states(&spec, &default_grid(&spec)?)?;
        let levels: Vec<String> = s.energies[..s.bound_count].iter().map(|e| format!("{e:.6}")).collect();
        println!("l = {l}: {}", levels.join(", "));
    }
    let full = PotentialSpec::gaussian_well(v0, alpha)?;
    let f = solve_schrodinger(&full, &default_grid(&full)?, 2)?;
    println!("full line, first odd level: {:.6}", f.energies[1]);
    Ok(())
}
