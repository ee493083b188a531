//! Symmetric eigenvalue solvers.

use nalgebra::DMatrix;

use super::{Spectrum, SymMatrix};
use crate::error::{Error, Result};

pub const JACOBI_MAX_SWEEPS: usize = 100;

/// Which dense symmetric solver computes a [`Spectrum`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum EigenMethod {
    /// Cyclic Jacobi rotations. Always used for orders up to
    /// [`JACOBI_CUTOFF`] under `Auto`.
    Jacobi,
    /// Householder tridiagonalization followed by implicit symmetric QR.
    Tridiagonal,
    /// Jacobi for small matrices, tridiagonal QR above the cutoff.
    #[default]
    Auto,
}

/// Largest order solved by Jacobi under [`EigenMethod::Auto`].
pub const JACOBI_CUTOFF: usize = 16;

/// Eigenvalues of `m` in ascending order.
pub fn eigenvalues(m: &SymMatrix) -> Result<Spectrum> {
    eigenvalues_with(m, EigenMethod::Auto)
}

pub fn eigenvalues_with(m: &SymMatrix, method: EigenMethod) -> Result<Spectrum> {
    let mut values = match method {
        EigenMethod::Jacobi => jacobi(m)?,
        EigenMethod::Tridiagonal => tridiagonal(m),
        EigenMethod::Auto if m.order() <= JACOBI_CUTOFF => jacobi(m)?,
        EigenMethod::Auto => tridiagonal(m),
    };
    values.sort_by(f64::total_cmp);
    Ok(Spectrum::from_sorted(values))
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut sum = 0.0;
    for p in 0..n {
        for q in p + 1..n {
            sum += a[p * n + q] * a[p * n + q];
        }
    }
    (2.0 * sum).sqrt()
}

/// Cyclic-by-row Jacobi. Converged once the off-diagonal Frobenius norm
/// drops below `1e-12 * order`.
fn jacobi(m: &SymMatrix) -> Result<Vec<f64>> {
    let n = m.order();
    let mut a = m.as_slice().to_vec();
    let tol = 1e-12 * n as f64;

    let mut off = off_diagonal_norm(&a, n);
    let mut sweeps = 0;
    while off > 0.0 && off >= tol {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::ConvergenceFailure { sweeps, off_norm: off });
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, n, p, q);
            }
        }
        sweeps += 1;
        off = off_diagonal_norm(&a, n);
    }
    Ok((0..n).map(|i| a[i * n + i]).collect())
}

/// Annihilates `a[p][q]` with a plane rotation, keeping `a` symmetric.
fn rotate(a: &mut [f64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    if apq == 0.0 {
        return;
    }
    let app = a[p * n + p];
    let aqq = a[q * n + q];
    let theta = (aqq - app) / (2.0 * apq);
    let t = if theta.abs() > 1e150 {
        0.5 / theta
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    for k in 0..n {
        if k == p || k == q {
            continue;
        }
        let akp = a[k * n + p];
        let akq = a[k * n + q];
        let new_kp = c * akp - s * akq;
        let new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;
}

fn tridiagonal(m: &SymMatrix) -> Vec<f64> {
    let n = m.order();
    if n == 0 {
        return Vec::new();
    }
    let dense = DMatrix::from_row_slice(n, n, m.as_slice());
    dense.symmetric_eigenvalues().iter().copied().collect()
}
