//! Cross-route identity check: the explicit formula against the
//! truncated zero sum, with the residual certified by the tail bound.
//!
//!     cargo run --release --example cross_route

use zeta_idd::{constants, g_explicit, g_zero_sum, sieve_von_mangoldt, tail_bound, zeros};

fn main() -> zeta_idd::Result<()> {
    let zero_table = zeros::bundled::first_1000();
    let table = sieve_von_mangoldt(3_269_018)?; // covers e^15
    let consts = constants();

    let mut max_residual = 0.0f64;
    let mut argmax = 0.0f64;
    for i in 0..=150 {
        let t = i as f64 * 0.1;
        let explicit = g_explicit(t, &table, consts)?.value;
        let zero_sum = g_zero_sum(t, zero_table)?.value;
        let residual = (explicit - zero_sum).abs();
        if residual > max_residual {
            max_residual = residual;
            argmax = t;
        }
    }

    let bound = tail_bound(zero_table).bound;
    println!("grid: t = 0, 0.1, ..., 15  (151 points)");
    println!("max |g_explicit - g_zero_sum| = {max_residual:.6e} at t = {argmax:.1}");
    println!("certified tail bound          = {bound:.6e}");
    println!("verdict: {}", if max_residual <= bound { "PASS" } else { "FAIL" });
    Ok(())
}
