//! Two-route numerics for the explicit-formula function
//!
//! ```text
//! g(t) = -4(e^{t/2} + e^{-t/2} - 2) + Σ_{n ≤ e^t} Λ(n)/√n (t - log n)
//!        - (t/2)(ψ(1/4) - log π)
//!        + (1/4)(e^{-t/2} Φ(e^{-2t}, 2, 1/4) - Φ(1, 2, 1/4)),
//! ```
//!
//! which equals the sum Σ_γ m_γ (e^{-iγt} - 1)/γ² over the ordinates γ
//! of the nontrivial zeta zeros. The crate evaluates g by both routes,
//! builds the associated atomic Lévy measure (mass m_γ/γ² at ±γ) and
//! its compound Poisson sampler, and ships verification suites for the
//! identities tying everything together: the Fourier transform of g
//! against ξ'/ξ, Bochner positive-semidefiniteness of exp(g), and
//! empirical characteristic functions against exp(g).
//!
//! Everything runs at finite truncation — a sieved prime-power table on
//! one side, a finite table of zero ordinates on the other — with
//! certified or documented bounds on what the truncation omits. None of
//! it can confirm or refute the Riemann Hypothesis; the suites check
//! numerical identities at the bundled heights.
//!
//! Start with the runnable examples (`cargo run --release --example
//! cross_route`) or the `zeta-idd` binary, which exposes the same
//! suites as subcommands.

pub mod accum;
pub mod analysis;
pub mod arith;
pub mod cli;
mod error;
pub mod gfun;
pub mod levy;
pub mod linalg;
pub mod quad;
pub mod sampler;
pub mod special;
pub mod xi;
pub mod zeros;

pub use error::{Error, Result};

/// Complex evaluation point; re/im are the coordinates used throughout.
pub type ComplexPoint = num_complex::Complex64;

pub use analysis::{
    bochner_check, cf_scan, fourier_g, BochnerReport, CfScanReport, FourierCheckResult,
    QuadratureConfig, Scheme,
};
pub use arith::{prime_term_sum, sieve_von_mangoldt, VonMangoldtEntry, VonMangoldtTable};
pub use gfun::{g_explicit, g_grid, g_zero_sum, GEvaluation, GridRoute, Route, T_MAX_EXPLICIT};
pub use levy::{admissibility, build_levy_measure, AdmissibilityReport, LevyAtom, LevyMeasure};
pub use sampler::{ecf_compare, sample, EcfReport, SampleBatch};
pub use special::{constants, digamma, lerch_phi_2_quarter, Constants};
pub use xi::{xi_log_deriv_dirichlet, xi_log_deriv_hadamard};
pub use zeros::{tail_bound, TailBound, ZeroTable};
