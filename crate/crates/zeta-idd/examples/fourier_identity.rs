//! Verify the Fourier identity ∫₀^∞ g(t) e^{izt} dt = (1/z²) ξ'/ξ(1/2 - iz)
//! with the two sides from independent code paths.
//!
//!     cargo run --release --example fourier_identity

use zeta_idd::{constants, fourier_g, sieve_von_mangoldt, ComplexPoint, QuadratureConfig};

fn main() -> zeta_idd::Result<()> {
    let cfg = QuadratureConfig::default();
    let table = sieve_von_mangoldt(cfg.required_sieve_limit())?;
    let consts = constants();

    for z in [
        ComplexPoint::new(0.0, 2.0),
        ComplexPoint::new(1.0, 2.0),
        ComplexPoint::new(-3.0, 1.5),
    ] {
        let r = fourier_g(z, &cfg, &table, consts)?;
        let budget = r.truncation_estimate + cfg.abs_tol + 1e-6;
        println!("z = {z}");
        println!("  lhs (quadrature)  = {:+.12e} {:+.12e}i", r.lhs.re, r.lhs.im);
        println!("  rhs (xi'/xi)      = {:+.12e} {:+.12e}i", r.rhs.re, r.rhs.im);
        println!("  |lhs - rhs|       = {:.3e}", r.abs_error);
        println!("  truncation est.   = {:.3e}", r.truncation_estimate);
        println!(
            "  verdict: {} (budget {budget:.3e})",
            if r.abs_error <= budget { "PASS" } else { "FAIL" }
        );
    }
    Ok(())
}
