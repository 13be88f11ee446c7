//! WKB transmission through a Gaussian barrier as a function of v0/E.

use qwell::semiclassical::{transmission_at_beta, uncertainty_tunneling_condition};

fn main() -> qwell::Result<()> {
    let (v0, alpha) = (2.0, 1.0);
    println!("{:>6} {:>12} {:>12} {:>9}", "beta", "T quad", "T closed", "dt cond");
    for beta in [1.01, 1.1, 1.5, 2.0, 3.0, 5.0, 10.0] {
        let t = transmission_at_beta(v0, alpha, beta)?;
        let cond = uncertainty_tunneling_condition(v0, alpha, v0 / beta)?;
        println!("{beta:>6} {:>12.6e} {:>12.6e} {cond:>9}", t.t_exact, t.t_approx);
    }
    let t = transmission_at_beta(v0, alpha, 2.0)?;
    println!("turning points at beta = 2: {:.6}, {:.6}", t.turning_points.0, t.turning_points.1);
    Ok(())
}
