//! Build the atomic Lévy measure from a zero table, check its
//! admissibility integrals, and confirm that its characteristic
//! exponent reproduces the zero-sum route for g.
//!
//!     cargo run --release --example levy_measure

use zeta_idd::{admissibility, build_levy_measure, g_zero_sum, zeros};

fn main() -> zeta_idd::Result<()> {
    let zero_table = zeros::bundled::first_1000();
    let measure = build_levy_measure(zero_table);
    let report = admissibility(&measure);

    println!("atoms:                 {}", measure.len());
    println!("truncation height:     {:.4}", measure.truncation_height());
    println!("total mass (λ_tot):    {:.12}", report.total_mass);
    println!("∫ min(1,λ²) dν:        {:.12}", report.min1_lambda2_integral);
    println!("∫_{{|λ|≤1}} |λ| dν:      {:.12}", report.abs_lambda_small_integral);
    println!("admissible:            {}", report.passed);

    let mut worst: f64 = 0.0;
    for i in 0..=40 {
        let t = -10.0 + i as f64 * 0.5;
        let exponent = measure.characteristic_exponent(t);
        let g = g_zero_sum(t, zero_table)?.value;
        worst = worst.max((exponent.re - g).abs().max(exponent.im.abs()));
    }
    println!("max |Σ mass(e^{{itλ}}-1) - g_zero_sum| over t-grid: {worst:.3e}");
    Ok(())
}
