//! Panel-refinement sanity of the composite Gauss–Legendre scheme on
//! the Fourier integrand, and the xi'/xi cross-route error as a
//! function of zero-table height.
//!
//!     cargo run --release --example quad_convergence

use zeta_idd::quad::gauss_legendre_composite;
use zeta_idd::{
    constants, g_explicit, sieve_von_mangoldt, xi_log_deriv_dirichlet, xi_log_deriv_hadamard,
    ComplexPoint,
};

fn main() -> zeta_idd::Result<()> {
    let table = sieve_von_mangoldt(8_886_111)?;
    let consts = constants();
    let z = ComplexPoint::new(0.0, 2.0);
    let integrand = |t: f64| -> zeta_idd::Result<ComplexPoint> {
        Ok(g_explicit(t, &table, consts)?.value * (ComplexPoint::i() * z * t).exp())
    };

    println!("composite Gauss-Legendre on [0, 16], z = 2i:");
    let mut previous: Option<(ComplexPoint, f64)> = None;
    for panels in [8usize, 16, 32, 64] {
        let out = gauss_legendre_composite(integrand, 0.0, 16.0, panels)?;
        let step = previous
            .map(|(value, _)| (out.value - value).norm())
            .unwrap_or(f64::NAN);
        let within = previous
            .map(|(_, est)| step <= est)
            .unwrap_or(true);
        println!(
            "  panels {panels:>3}: value {:+.12e}  est {:.3e}  step-from-prev {:.3e}  within-prev-est {}",
            out.value.re, out.error_estimate, step, within
        );
        previous = Some((out.value, out.error_estimate));
    }

    println!("\nxi'/xi cross-route worst relative error by table height:");
    for count in [100usize, 300, 1000] {
        let zeros = zeta_idd::zeros::bundled::first_1000().truncated(count)?;
        let mut worst = 0.0f64;
        for &sigma in &[1.5, 2.25, 3.0] {
            for &im in &[-5.0, 0.0, 2.0] {
                let s = ComplexPoint::new(sigma, im);
                let dirichlet = xi_log_deriv_dirichlet(s, &table)?;
                let hadamard = xi_log_deriv_hadamard(ComplexPoint::i() * (s - 0.5), &zeros)?;
                worst = worst.max((dirichlet - hadamard).norm() / dirichlet.norm());
            }
        }
        println!("  {count:>5} zeros: {worst:.3e}");
    }
    Ok(())
}
