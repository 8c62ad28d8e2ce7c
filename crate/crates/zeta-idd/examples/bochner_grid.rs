//! Positive semidefiniteness of the kernel exp(g(t_j - t_k)) on a
//! 64-point grid, via the smallest eigenvalue.
//!
//!     cargo run --release --example bochner_grid

use zeta_idd::{bochner_check, g_zero_sum, zeros};

fn main() -> zeta_idd::Result<()> {
    let zero_table = zeros::bundled::first_1000();
    let grid: Vec<f64> = (0..64).map(|i| -8.0 + i as f64 * (16.0 / 63.0)).collect();
    let report = bochner_check(&grid, |t| Ok(g_zero_sum(t, zero_table)?.value))?;

    println!("matrix dimension: {0}x{0}", report.matrix_dim);
    println!("min eigenvalue:   {:+.6e}", report.min_eigenvalue);
    println!(
        "verdict: {} (floor -1e-8)",
        if report.min_eigenvalue >= -1e-8 { "PASS" } else { "FAIL" }
    );
    Ok(())
}
