//! Dense numerical kernel: matrices, orthogonal projections, a cyclic Jacobi
//! eigensolver and tolerance-based numerical rank.
//!
//! Everything is dense and allocation-per-call. Sizes of interest are `dn ≲ 100`.

mod eigen;
mod matrix;
mod rank;

pub use eigen::{
    sym_eigen, sym_eigenvalues, SpectrumReport, JACOBI_MAX_SWEEPS, JACOBI_TOLERANCE,
    SYMMETRY_TOLERANCE,
};
pub use matrix::Matrix;
pub use rank::{numerical_rank, rank_of_spectrum, RankInfo, TolPolicy};

use crate::error::{Error, Result};

/// Largest tolerated deviation of `‖g‖` from one in [`projection`].
pub const UNIT_NORM_TOLERANCE: f64 = 1e-9;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// `a / ‖a‖`, or `None` for the zero vector.
pub fn normalized(a: &[f64]) -> Option<Vec<f64>> {
    let n = norm(a);
    (n > 0.0 && n.is_finite()).then(|| a.iter().map(|x| x / n).collect())
}

/// Orthogonal projection `I − g gᵀ` onto the complement of the unit vector `g`.
pub fn projection(g: &[f64]) -> Result<Matrix> {
    let n = norm(g);
    if !n.is_finite() || (n - 1.0).abs() > UNIT_NORM_TOLERANCE {
        return Err(Error::invalid(format!(
            "projection needs a unit vector, got norm {n}"
        )));
    }
    Ok(projection_unchecked(g))
}

/// Projection onto the complement of `span{x}` for any nonzero `x`.
pub fn projection_of(x: &[f64]) -> Result<Matrix> {
    let g = normalized(x).ok_or_else(|| Error::invalid("projection of the zero vector"))?;
    Ok(projection_unchecked(&g))
}

pub(crate) fn projection_unchecked(g: &[f64]) -> Matrix {
    let d = g.len();
    let mut p = Matrix::identity(d);
    for i in 0..d {
        for j in 0..d {
            p[(i, j)] -= g[i] * g[j];
        }
    }
    p
}
