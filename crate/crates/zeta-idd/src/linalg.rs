//! Cyclic Jacobi eigenvalue iteration for dense symmetric matrices.
//!
//! The Bochner grids here are at most 256×256, well inside the range
//! where Jacobi is simple, deterministic, and accurate to machine
//! precision without pulling in a linear-algebra dependency.

use crate::error::{Error, Result};

const MAX_SWEEPS: usize = 64;

/// All eigenvalues of a symmetric matrix, sorted ascending.
pub fn jacobi_eigenvalues(matrix: &[Vec<f64>]) -> Result<Vec<f64>> {
    let n = matrix.len();
    if n == 0 {
        return Ok(Vec::new());
    }
    for (i, row) in matrix.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Validation(format!(
                "matrix row {i} has length {} in a {n}x{n} matrix",
                row.len()
            )));
        }
        for (j, &value) in row.iter().enumerate() {
            if (value - matrix[j][i]).abs() > 1e-12 {
                return Err(Error::Validation(format!(
                    "matrix is not symmetric at ({i}, {j})"
                )));
            }
        }
    }

    let mut a: Vec<f64> = matrix.iter().flatten().copied().collect();
    let frobenius: f64 = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let stop = 1e-15 * frobenius.max(f64::MIN_POSITIVE);

    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0f64;
        for p in 0..n {
            for q in (p + 1)..n {
                off += 2.0 * a[p * n + q] * a[p * n + q];
            }
        }
        if off.sqrt() <= stop {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let tau = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }

    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(eigenvalues)
}

/// Smallest eigenvalue of a symmetric matrix.
pub fn symmetric_min_eigenvalue(matrix: &[Vec<f64>]) -> Result<f64> {
    let eigenvalues = jacobi_eigenvalues(matrix)?;
    eigenvalues
        .first()
        .copied()
        .ok_or_else(|| Error::Validation("empty matrix has no eigenvalues".into()))
}
