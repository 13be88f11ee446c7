//! Tip-sample gap estimate against the WKB transmission at E = v0/2.

use qwell::semiclassical::{stm_estimate, transmission_at_beta};

fn main() -> qwell::Result<()> {
    for ratio in [2.883, 10.0, 128.6] {
        let t = transmission_at_beta(ratio, 1.0, 2.0)?;
        println!(
            "v0/alpha = {ratio:>6}: estimate {:.4e}  quadrature {:.4e}  closed form {:.4e}",
            stm_estimate(ratio)?,
            t.t_exact,
            t.t_approx
        );
    }
    Ok(())
}
