//! Compare the two ξ'/ξ evaluators on a 20-point grid: the
//! Dirichlet-series route in s against the Hadamard zero-sum route at
//! z = i(s - 1/2).
//!
//!     cargo run --release --example xi_routes [path/to/zeros.txt]

use zeta_idd::{
    sieve_von_mangoldt, xi_log_deriv_dirichlet, xi_log_deriv_hadamard, ComplexPoint, ZeroTable,
};

fn main() -> zeta_idd::Result<()> {
    let zero_table = match std::env::args().nth(1) {
        Some(path) => ZeroTable::load(path)?,
        None => zeta_idd::zeros::bundled::first_1000().clone(),
    };
    let table = sieve_von_mangoldt(8_886_111)?; // covers e^16

    println!("zero table: {} ({} zeros)", zero_table.source(), zero_table.len());
    let mut worst: f64 = 0.0;
    for &sigma in &[1.2, 1.65, 2.1, 2.55, 3.0] {
        for &im in &[-5.0, -2.0, 2.0, 5.0] {
            let s = ComplexPoint::new(sigma, im);
            let z = ComplexPoint::i() * (s - 0.5);
            let dirichlet = xi_log_deriv_dirichlet(s, &table)?;
            let hadamard = xi_log_deriv_hadamard(z, &zero_table)?;
            let relative = (dirichlet - hadamard).norm() / dirichlet.norm();
            worst = worst.max(relative);
            println!(
                "s = {sigma:5.3} {im:+5.2}i   |D - H|/|D| = {relative:.3e}   (|D| = {:.4e})",
                dirichlet.norm()
            );
        }
    }
    println!("\nworst relative disagreement: {worst:.3e}");
    Ok(())
}
