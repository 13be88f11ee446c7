//! Adaptive quadrature, bisection and erf from the numerics module.

use std::f64::consts::PI;

use qwell::numerics::{adaptive_quadrature, bisect_root, erf, QuadratureSettings};

fn main() -> qwell::Result<()> {
    let settings = QuadratureSettings::default();

    // ∫₀¹ √(1 - x²) dx = π/4, square-root endpoint handled by refinement
    let quarter = adaptive_quadrature(|x| (1.0 - x * x).max(0.0).sqrt(), 0.0, 1.0, settings)?;
    println!("quarter circle: {quarter:.12} (error {:.1e})", quarter - PI / 4.0);

    for x in [0.1, 0.5, 1.0, 2.0, 3.0] {
        let by_quad = adaptive_quadrature(|t| (-t * t).exp(), 0.0, x, settings)? * 2.0 / PI.sqrt();
        println!("erf({x}) = {:.15}  quadrature {:.15}", erf(x), by_quad);
    }

    let root = bisect_root(|x| erf(x) - 0.5, 0.0, 1.0, 1e-14)?;
    println!("erf(x) = 1/2 at x = {root:.14}");
    Ok(())
}
