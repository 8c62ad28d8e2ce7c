//! Draw a million compound Poisson samples and compare their empirical
//! characteristic function with exp(g).
//!
//!     cargo run --release --example sample_ecf

use zeta_idd::{build_levy_measure, ecf_compare, sample, zeros};

fn main() -> zeta_idd::Result<()> {
    let zero_table = zeros::bundled::first_100();
    let measure = build_levy_measure(zero_table);
    let n = 1_000_000;
    let seed = 20_240_801;

    let batch = sample(&measure, n, seed)?;
    let zero_fraction =
        batch.values.iter().filter(|&&x| x == 0.0).count() as f64 / n as f64;
    println!("n = {n}, seed = {seed}");
    println!("zero-sample fraction: {zero_fraction:.6}");
    println!("expected e^(-λ_tot):  {:.6}", (-measure.total_mass()).exp());

    let tgrid: Vec<f64> = (0..21).map(|i| -10.0 + i as f64).collect();
    let report = ecf_compare(&batch, zero_table, &tgrid)?;
    println!("ECF sup error over 21 t-points: {:.3e}", report.sup_error);
    println!("CLT tolerance 3/sqrt(n):        {:.3e}", report.clt_tolerance);
    println!("verdict: {}", if report.passed() { "PASS" } else { "FAIL" });
    Ok(())
}
