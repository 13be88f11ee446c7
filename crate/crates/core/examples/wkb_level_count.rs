//! Semiclassical level count and levels compared with the matrix solver.

use qwell::discretize::default_grid;
use qwell::eigensolve::solve_bound_states;
use qwell::semiclassical::{wkb_count, wkb_levels};
use qwell::PotentialSpec;

fn main() -> qwell::Result<()> {
    for v0 in [0.5, 1.0, 10.0, 100.0] {
        let w = wkb_count(v0, 1.0)?;
        let spec = PotentialSpec::gaussian_well(v0, 1.0)?;
        let s = solve_bound_states(&spec, &default_grid(&spec)?)?;
        println!("v0/alpha = {v0:>5}: n_real = {:.3}, floor = {}, numerical = {}", w.n_real, w.n_levels, s.bound_count);
    }

    let spec = PotentialSpec::gaussian_well(10.0, 1.0)?;
    let wkb = wkb_levels(&spec, 10)?;
    let exact = solve_bound_states(&spec, &default_grid(&spec)?)?;
    println!("\n n   WKB          matrix");
    for (n, e) in wkb.iter().enumerate() {
        let m = exact.energies.get(n).copied().unwrap_or(f64::NAN);
        println!("{:>2}  {e:>11.6}  {m:>11.6}", n + 1);
    }
    Ok(())
}
