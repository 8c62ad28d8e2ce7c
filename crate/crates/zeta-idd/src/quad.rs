//! Complex-valued quadrature over real intervals: adaptive Simpson with
//! a per-panel Richardson error estimate, and composite Gauss–Legendre
//! as an independent cross-check scheme.

use num_complex::Complex64;

use crate::error::Result;

/// Result of one quadrature run.
#[derive(Debug, Clone, Copy)]
pub struct QuadratureOutcome {
    pub value: Complex64,
    /// Scheme-reported absolute error estimate.
    pub error_estimate: f64,
    pub evaluations: usize,
}

const MAX_DEPTH: u32 = 48;

/// Adaptive Simpson integration of `f` over `[a, b]`.
///
/// Intervals split until the Richardson estimate |S₂ − S₁|/15 meets the
/// locally apportioned tolerance; leaf corrections are accumulated into
/// the returned error estimate. Integrand failures abort the run.
pub fn adaptive_simpson<F>(mut f: F, a: f64, b: f64, abs_tol: f64) -> Result<QuadratureOutcome>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    let mut evaluations = 0usize;
    let mut eval = |x: f64, n: &mut usize| -> Result<Complex64> {
        *n += 1;
        f(x)
    };

    let m = 0.5 * (a + b);
    let fa = eval(a, &mut evaluations)?;
    let fm = eval(m, &mut evaluations)?;
    let fb = eval(b, &mut evaluations)?;
    let whole = simpson_rule(fa, fm, fb, b - a);

    struct Frame {
        a: f64,
        b: f64,
        fa: Complex64,
        fm: Complex64,
        fb: Complex64,
        whole: Complex64,
        tol: f64,
        depth: u32,
    }

    let mut stack = vec![Frame {
        a,
        b,
        fa,
        fm,
        fb,
        whole,
        tol: abs_tol,
        depth: 0,
    }];
    let mut value = Complex64::new(0.0, 0.0);
    let mut error_estimate = 0.0;

    while let Some(frame) = stack.pop() {
        let m = 0.5 * (frame.a + frame.b);
        let lm = 0.5 * (frame.a + m);
        let rm = 0.5 * (m + frame.b);
        let flm = eval(lm, &mut evaluations)?;
        let frm = eval(rm, &mut evaluations)?;
        let left = simpson_rule(frame.fa, flm, frame.fm, m - frame.a);
        let right = simpson_rule(frame.fm, frm, frame.fb, frame.b - m);
        let delta = left + right - frame.whole;

        if frame.depth >= MAX_DEPTH || delta.norm() <= 15.0 * frame.tol {
            value += left + right + delta / 15.0;
            error_estimate += delta.norm() / 15.0;
        } else {
            stack.push(Frame {
                a: frame.a,
                b: m,
                fa: frame.fa,
                fm: flm,
                fb: frame.fm,
                whole: left,
                tol: 0.5 * frame.tol,
                depth: frame.depth + 1,
            });
            stack.push(Frame {
                a: m,
                b: frame.b,
                fa: frame.fm,
                fm: frm,
                fb: frame.fb,
                whole: right,
                tol: 0.5 * frame.tol,
                depth: frame.depth + 1,
            });
        }
    }

    Ok(QuadratureOutcome {
        value,
        error_estimate,
        evaluations,
    })
}

#[inline]
fn simpson_rule(fa: Complex64, fm: Complex64, fb: Complex64, h: f64) -> Complex64 {
    (h / 6.0) * (fa + 4.0 * fm + fb)
}

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1],
/// found by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre_nodes(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 2);
    let mut nodes = vec![0.0; order];
    let mut weights = vec![0.0; order];
    let n = order as f64;
    for i in 0..order {
        // Tricomi initial guess, then Newton.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
        for _ in 0..100 {
            let (p, dp) = legendre_with_derivative(order, x);
            let step = p / dp;
            x -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        let (_, dp) = legendre_with_derivative(order, x);
        nodes[i] = x;
        weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    (nodes, weights)
}

/// P_n(x) and P_n'(x) by the three-term recurrence.
fn legendre_with_derivative(order: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 2..=order {
        let kf = k as f64;
        let p_next = ((2.0 * kf - 1.0) * x * p - (kf - 1.0) * p_prev) / kf;
        p_prev = p;
        p = p_next;
    }
    let dp = order as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

/// Composite Gauss–Legendre integration: `panels` equal panels with a
/// 12-point rule each. The error estimate is the difference against a
/// run with doubled panel count (whose value is the one returned).
pub fn gauss_legendre_composite<F>(
    mut f: F,
    a: f64,
    b: f64,
    panels: usize,
) -> Result<QuadratureOutcome>
where
    F: FnMut(f64) -> Result<Complex64>,
{
    const ORDER: usize = 12;
    let (nodes, weights) = gauss_legendre_nodes(ORDER);
    let mut evaluations = 0usize;

    let mut run = |count: usize, evals: &mut usize| -> Result<Complex64> {
        let width = (b - a) / count as f64;
        let mut total = Complex64::new(0.0, 0.0);
        for panel in 0..count {
            let lo = a + panel as f64 * width;
            let center = lo + 0.5 * width;
            let half = 0.5 * width;
            let mut acc = Complex64::new(0.0, 0.0);
            for (&x, &w) in nodes.iter().zip(&weights) {
                *evals += 1;
                acc += w * f(center + half * x)?;
            }
            total += acc * half;
        }
        Ok(total)
    };

    let coarse = run(panels, &mut evaluations)?;
    let fine = run(2 * panels, &mut evaluations)?;
    Ok(QuadratureOutcome {
        value: fine,
        error_estimate: (fine - coarse).norm(),
        evaluations,
    })
}
