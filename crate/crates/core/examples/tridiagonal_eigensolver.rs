//! The eigensolver on a hand-built matrix.

use qwell::discretize::TridiagonalOperator;
use qwell::eigensolve::{eigen_range, sturm_count};

fn main() -> qwell::Result<()> {
    // [2 1 0 0]
    // [1 3 1 0]
    // [0 1 4 1]
    // [0 0 1 5]
    let op = TridiagonalOperator::new(vec![2.0, 3.0, 4.0, 5.0], vec![1.0, 1.0, 1.0])?;
    let pairs = eigen_range(&op, 4)?;
    for (value, vector) in pairs.values.iter().zip(&pairs.vectors) {
        let av = op.apply(vector);
        let residual = av.iter().zip(vector).map(|(a, v)| (a - value * v).powi(2)).sum::<f64>().sqrt();
        println!("lambda = {value:.12}  residual = {residual:.1e}  v = {vector:.4?}");
    }
    println!("eigenvalues below 3.5: {}", sturm_count(&op, 3.5));
    println!("gershgorin bounds: {:?}", op.gershgorin());
    Ok(())
}
