//! Bound states of a Gaussian well on the default grid.

use qwell::discretize::default_grid;
use qwell::eigensolve::solve_bound_states;
use qwell::PotentialSpec;

fn main() -> qwell::Result<()> {
    let spec = PotentialSpec::gaussian_well(3.0, 0.1)?;
    let grid = default_grid(&spec)?;
    let spectrum = solve_bound_states(&spec, &grid)?;

    println!("grid [{}, {}], delta = {}", grid.x_min(), grid.x_max(), grid.delta());
    println!("{} bound states", spectrum.bound_count);
    for d in spectrum.descriptors() {
        println!(
            "{:>2}  E = {:>12.8}  nodes = {}  parity = {:?}  bound = {}",
            d.index, d.energy, d.nodes, d.parity, d.bound
        );
    }
    for w in &spectrum.warnings {
        println!("warning: {w}");
    }
    Ok(())
}
