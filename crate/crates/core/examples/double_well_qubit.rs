//! Lowest doublet of the double Gaussian well.

use qwell::analysis::double_well_report;

fn main() -> qwell::Result<()> {
    for v0 in [3.0, 5.0, 10.0, 15.0] {
        let (r, spectrum) = double_well_report(v0, 1.0, None)?;
        let d = spectrum.descriptors();
        print!(
            "v0 = {v0:>4}: E1 = {:.6}  E2 = {:.6}  dE = {:.6}  tau = {:.3}  parities {:?}/{:?}",
            r.e1, r.e2, r.delta_e, r.period, d[0].parity, d[1].parity
        );
        match r.decoupling_ratio {
            Some(q) => println!("  ratio = {q:.4}"),
            None => println!("  (no third bound level)"),
        }
    }
    Ok(())
}
