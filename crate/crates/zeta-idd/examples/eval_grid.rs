//! Tabulate g(t) on a grid by both routes.
//!
//!     cargo run --release --example eval_grid

use zeta_idd::{constants, g_explicit, g_zero_sum, sieve_von_mangoldt, zeros};

fn main() -> zeta_idd::Result<()> {
    let table = sieve_von_mangoldt(22_027)?; // covers e^10
    let consts = constants();
    let zero_table = zeros::bundled::first_1000();

    println!("{:>6} {:>22} {:>22} {:>12}", "t", "g (explicit)", "g (zero sum)", "residual");
    for i in 0..=20 {
        let t = i as f64 * 0.5;
        let explicit = g_explicit(t, &table, consts)?.value;
        let zero_sum = g_zero_sum(t, zero_table)?.value;
        println!(
            "{t:>6.2} {explicit:>22.15} {zero_sum:>22.15} {:>12.3e}",
            (explicit - zero_sum).abs()
        );
    }
    let bound = zeta_idd::tail_bound(zero_table).bound;
    println!("\ntail bound of the 1000-zero table: {bound:.3e}");
    Ok(())
}
