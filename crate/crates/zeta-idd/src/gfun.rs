//! The function g(t), computed by two independent routes.
//!
//! The explicit route evaluates the arithmetic formula
//!
//! ```text
//! g(t) = -4(e^{t/2} + e^{-t/2} - 2) + Σ_{n ≤ e^t} Λ(n)/√n (t - log n)
//!        - (t/2)(ψ(1/4) - log π)
//!        + (1/4)(e^{-t/2} Φ(e^{-2t}, 2, 1/4) - Φ(1, 2, 1/4))
//! ```
//!
//! for t ≥ 0, extended evenly to negative t. The zero-sum route
//! evaluates Σ_γ m_γ (e^{-iγt} - 1)/γ² over a validated table of zero
//! ordinates, with the ±γ pairs combined into the manifestly real and
//! non-positive form -4 m_γ sin²(γt/2)/γ². Both routes take |t| first,
//! so g(t) and g(-t) are bit-identical by construction.

use serde::Serialize;

use crate::arith::{prime_term_sum, VonMangoldtTable};
use crate::error::{Error, Result};
use crate::special::{lerch_phi_2_quarter, Constants};
use crate::zeros::{tail_bound, ZeroTable};
use crate::accum::Neumaier;

/// Hard cap for the explicit route. Beyond t ≈ 20 the -4e^{t/2} term and
/// the prime sum cancel to more digits than double precision carries.
pub const T_MAX_EXPLICIT: f64 = 20.0;

/// Which formula produced a [`GEvaluation`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    Explicit,
    ZeroSum,
}

/// One evaluation of g.
///
/// For the zero-sum route the value is guaranteed within `tail_bound` of
/// the untruncated sum. For the explicit route the value is exact up to
/// floating accumulation (below 1e-9 for |t| ≤ 20, and far below that
/// for desk-scale t).
#[derive(Debug, Clone, Copy, Serialize)]
pub struct GEvaluation {
    pub t: f64,
    pub value: f64,
    pub route: Route,
    pub truncation_height: Option<f64>,
    pub tail_bound: Option<f64>,
}

/// Evaluate g by the explicit arithmetic formula.
///
/// The four terms are computed separately and combined with compensated
/// accumulation in a fixed order: exponential term, prime sum, linear
/// term, Lerch term.
pub fn g_explicit(
    t: f64,
    table: &VonMangoldtTable,
    consts: &Constants,
) -> Result<GEvaluation> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("g requires finite t, got {t}")));
    }
    let u = t.abs();
    if u > T_MAX_EXPLICIT {
        return Err(Error::Domain(format!(
            "|t| = {u} exceeds the explicit-route cap {T_MAX_EXPLICIT} \
             (double precision loses the e^{{t/2}}-scale cancellation)"
        )));
    }

    let exponential = -4.0 * ((u / 2.0).exp() + (-u / 2.0).exp() - 2.0);
    let prime = prime_term_sum(u, table)?;
    let linear = -(u / 2.0) * (consts.psi_quarter - consts.log_pi);
    let lerch = 0.25
        * ((-u / 2.0).exp() * lerch_phi_2_quarter((-2.0 * u).exp())?
            - consts.phi_1_2_quarter);

    let mut acc = Neumaier::new();
    acc.add(exponential);
    acc.add(prime);
    acc.add(linear);
    acc.add(lerch);

    Ok(GEvaluation {
        t,
        value: acc.total(),
        route: Route::Explicit,
        truncation_height: None,
        tail_bound: None,
    })
}

/// Evaluate g by the truncated zero sum.
///
/// Terms are added in ascending γ with compensated accumulation; each
/// term -4 m_γ sin²(γt/2)/γ² equals m_γ · 2(cos(γt) - 1)/γ² and is
/// non-positive, so the non-positivity of the result is structural.
/// The returned evaluation carries the table's certified tail bound.
///
/// ```
/// let zeros = zeta_idd::zeros::bundled::first_100();
/// let eval = zeta_idd::g_zero_sum(1.0, zeros).unwrap();
/// assert!(eval.value < 0.0);
/// assert!((eval.value - zeta_idd::g_zero_sum(-1.0, zeros).unwrap().value).abs() == 0.0);
/// ```
pub fn g_zero_sum(t: f64, zeros: &ZeroTable) -> Result<GEvaluation> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("g requires finite t, got {t}")));
    }
    let u = t.abs();

    let mut acc = Neumaier::new();
    for (&gamma, &m) in zeros.ordinates().iter().zip(zeros.multiplicities()) {
        let s = (0.5 * gamma * u).sin();
        acc.add(-4.0 * (m as f64) * s * s / (gamma * gamma));
    }

    let tb = tail_bound(zeros);
    Ok(GEvaluation {
        t,
        value: acc.total(),
        route: Route::ZeroSum,
        truncation_height: Some(tb.height),
        tail_bound: Some(tb.bound),
    })
}

/// Resources for one [`g_grid`] route.
#[derive(Clone, Copy)]
pub enum GridRoute<'a> {
    Explicit {
        table: &'a VonMangoldtTable,
        consts: &'a Constants,
    },
    ZeroSum { zeros: &'a ZeroTable },
}

/// Element-wise evaluation over a grid of t values; order-preserving and
/// deterministic. A failing element aborts with its index attached.
pub fn g_grid(ts: &[f64], route: GridRoute<'_>) -> Result<Vec<GEvaluation>> {
    ts.iter()
        .enumerate()
        .map(|(index, &t)| {
            let eval = match route {
                GridRoute::Explicit { table, consts } => g_explicit(t, table, consts),
                GridRoute::ZeroSum { zeros } => g_zero_sum(t, zeros),
            };
            eval.map_err(|e| Error::Element {
                index,
                source: Box::new(e),
            })
        })
        .collect()
}
