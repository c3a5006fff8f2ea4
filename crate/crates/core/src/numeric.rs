//! Floating-point symmetric eigenvalues by cyclic Jacobi rotations, used to
//! cross-check exact inertia and to print spectra.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{Inertia, IntMatrix};

pub const DEFAULT_ZERO_TOL: f64 = 1e-6;
const MAX_SWEEPS: usize = 100;

/// Eigenvalues in ascending order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub tol: f64,
}

impl Spectrum {
    /// Distinct values with multiplicities; values within `tol` of the
    /// previous group's first member join that group.
    pub fn grouped(&self, tol: f64) -> Vec<(f64, usize)> {
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut anchor = f64::NAN;
        for &x in &self.eigenvalues {
            match out.last_mut() {
                Some((mean, count)) if (x - anchor).abs() <= tol => {
                    *mean = (*mean * *count as f64 + x) / (*count as f64 + 1.0);
                    *count += 1;
                }
                _ => {
                    anchor = x;
                    out.push((x, 1));
                }
            }
        }
        out
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }
}

/// Eigenvalues of a symmetric integer matrix.
pub fn eigenvalues_symmetric(m: &IntMatrix, tol: f64) -> Result<Spectrum> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    jacobi_eigenvalues(m.to_f64(), m.n(), tol)
}

/// Cyclic Jacobi on a dense row-major symmetric matrix. Stops once the
/// off-diagonal Frobenius norm drops below `tol * max(1, ||A||_F)`.
pub fn jacobi_eigenvalues(a: Vec<f64>, n: usize, tol: f64) -> Result<Spectrum> {
    jacobi_with_budget(a, n, tol, MAX_SWEEPS)
}

/// [`jacobi_eigenvalues`] with an explicit sweep budget.
pub fn jacobi_with_budget(mut a: Vec<f64>, n: usize, tol: f64, max_sweeps: usize) -> Result<Spectrum> {
    assert!(tol > 0.0, "tolerance must be positive");
    assert_eq!(a.len(), n * n);
    for i in 0..n {
        for j in i + 1..n {
            if (a[i * n + j] - a[j * n + i]).abs() > 0.0 {
                return Err(Error::NotSymmetric);
            }
        }
    }
    let frob = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    let threshold = tol * frob.max(1.0);
    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off(&a) >= threshold {
        if sweeps == max_sweeps {
            return Err(Error::NonConvergence { sweeps });
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
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
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }
    let mut eigenvalues: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eigenvalues.sort_by(f64::total_cmp);
    Ok(Spectrum { eigenvalues, tol })
}

/// Counts of eigenvalues above `zero_tol`, within it, and below `-zero_tol`.
pub fn sign_counts(s: &Spectrum, zero_tol: f64) -> Inertia {
    let plus = s.eigenvalues.iter().filter(|&&x| x > zero_tol).count();
    let minus = s.eigenvalues.iter().filter(|&&x| x < -zero_tol).count();
    Inertia::new(plus, s.eigenvalues.len() - plus - minus, minus)
}
