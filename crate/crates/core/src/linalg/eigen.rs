use serde::Serialize;

use super::Matrix;
use crate::error::{Error, Result};

/// Off-diagonal Frobenius norm at which the sweeps stop, relative to `‖A‖_F`.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
/// Maximum number of cyclic sweeps before giving up.
pub const JACOBI_MAX_SWEEPS: usize = 100;
/// Allowed asymmetry `‖A − Aᵀ‖_max` relative to `‖A‖_max`.
pub const SYMMETRY_TOLERANCE: f64 = 1e-10;

/// Result of a symmetric eigendecomposition.
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumReport {
    /// Eigenvalues sorted ascending.
    pub eigenvalues: Vec<f64>,
    /// Off-diagonal Frobenius norm of the rotated matrix when the solver stopped.
    pub offdiag_residual: f64,
    pub sweeps_used: usize,
    /// Column `k` is the unit eigenvector of `eigenvalues[k]`. Absent when only
    /// eigenvalues were requested.
    #[serde(skip)]
    pub eigenvectors: Option<Matrix>,
}

impl SpectrumReport {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn min(&self) -> f64 {
        self.eigenvalues.first().copied().unwrap_or(0.0)
    }

    pub fn max(&self) -> f64 {
        self.eigenvalues.last().copied().unwrap_or(0.0)
    }

    /// Largest eigenvalue magnitude.
    pub fn spectral_radius(&self) -> f64 {
        self.min().abs().max(self.max().abs())
    }
}

/// Full eigendecomposition of a symmetric matrix by cyclic Jacobi rotations.
pub fn sym_eigen(a: &Matrix) -> Result<SpectrumReport> {
    jacobi(a, true)
}

/// Eigenvalues only; skips accumulating the rotations.
pub fn sym_eigenvalues(a: &Matrix) -> Result<SpectrumReport> {
    jacobi(a, false)
}

fn check_symmetric(a: &Matrix) -> Result<()> {
    if !a.is_square() {
        return Err(Error::invalid(format!(
            "eigensolver needs a square matrix, got {}x{}",
            a.rows(),
            a.cols()
        )));
    }
    let defect = a.symmetry_defect();
    if defect > SYMMETRY_TOLERANCE * a.max_abs() {
        return Err(Error::invalid(format!(
            "matrix is not symmetric (max |A - Aᵀ| = {defect:e})"
        )));
    }
    Ok(())
}

fn off_diagonal_norm(a: &[f64], n: usize) -> f64 {
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[i * n + j] * a[i * n + j];
            }
        }
    }
    s.sqrt()
}

fn jacobi(input: &Matrix, want_vectors: bool) -> Result<SpectrumReport> {
    check_symmetric(input)?;
    let n = input.rows();

    // work on the exactly symmetric part
    let mut a = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = 0.5 * (input[(i, j)] + input[(j, i)]);
        }
    }
    let mut v = if want_vectors {
        Matrix::identity(n).as_slice().to_vec()
    } else {
        Vec::new()
    };

    let target = JACOBI_TOLERANCE * input.frobenius();
    let mut off = off_diagonal_norm(&a, n);
    let mut sweeps = 0;

    while off > target {
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(Error::NumericalFailure {
                sweeps,
                residual: off,
                partial_diagonal: (0..n).map(|i| a[i * n + i]).collect(),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                // A <- Jᵀ A J on rows/columns p and q
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

                if want_vectors {
                    for k in 0..n {
                        let vkp = v[k * n + p];
                        let vkq = v[k * n + q];
                        v[k * n + p] = c * vkp - s * vkq;
                        v[k * n + q] = s * vkp + c * vkq;
                    }
                }
            }
        }
        off = off_diagonal_norm(&a, n);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[x * n + x].total_cmp(&a[y * n + y]));
    let eigenvalues = order.iter().map(|&i| a[i * n + i]).collect();
    let eigenvectors = want_vectors.then(|| {
        let mut sorted = Matrix::zeros(n, n);
        for (col, &src) in order.iter().enumerate() {
            for k in 0..n {
                sorted[(k, col)] = v[k * n + src];
            }
        }
        sorted
    });

    Ok(SpectrumReport {
        eigenvalues,
        offdiag_residual: off,
        sweeps_used: sweeps,
        eigenvectors,
    })
}
