//! Numerical checks of the projection-matrix facts that the Henneberg induction
//! rests on: singularity of projection sums, the spectrum of the Schur-complement
//! block `H = D − F E⁻¹ Fᵀ`, and rank monotonicity of PSD sums.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    normalized, numerical_rank, projection_unchecked, sym_eigen, sym_eigenvalues, Matrix,
    SpectrumReport, TolPolicy,
};

/// Eigenvalues of `H` must sit within this distance of 0 or 1.
pub const SPECTRUM_TOLERANCE: f64 = 1e-8;
/// Bound on `‖H N‖_max` for the explicit null basis `N`.
pub const NULL_BASIS_TOLERANCE: f64 = 1e-9;
/// Unit directions closer than this (in sine of the angle) count as parallel.
const PARALLEL_TOLERANCE: f64 = 1e-9;

fn unit_directions(vectors: &[Vec<f64>]) -> Result<(usize, Vec<Vec<f64>>)> {
    if vectors.len() < 2 {
        return Err(Error::invalid(format!(
            "need at least two vectors, got {}",
            vectors.len()
        )));
    }
    let d = vectors[0].len();
    if d < 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    let mut units = Vec::with_capacity(vectors.len());
    for (i, x) in vectors.iter().enumerate() {
        if x.len() != d {
            return Err(Error::invalid(format!(
                "vector {i} has dimension {}, expected {d}",
                x.len()
            )));
        }
        if x.iter().any(|c| !c.is_finite()) {
            return Err(Error::invalid(format!("vector {i} has a non-finite entry")));
        }
        units.push(normalized(x).ok_or_else(|| Error::invalid(format!("vector {i} is zero")))?);
    }
    Ok((d, units))
}

/// Combinatorial collinearity: every direction is parallel to the first.
fn all_parallel(units: &[Vec<f64>]) -> bool {
    let first = &units[0];
    units.iter().skip(1).all(|u| {
        let c: f64 = first.iter().zip(u).map(|(a, b)| a * b).sum();
        let residual: f64 = first.iter().zip(u).map(|(f, x)| (x - c * f).powi(2)).sum();
        residual.sqrt() <= PARALLEL_TOLERANCE
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ProjectionSumReport {
    /// `E = Σ P(x_i/‖x_i‖)`.
    #[serde(skip)]
    pub sum: Matrix,
    pub min_eigenvalue: f64,
    pub threshold: f64,
    /// Spectral verdict: smallest eigenvalue at or below the threshold.
    pub singular: bool,
    /// Combinatorial verdict: all vectors lie on one line.
    pub collinear: bool,
}

impl ProjectionSumReport {
    /// The sum is singular exactly when all vectors are collinear.
    pub fn consistent(&self) -> bool {
        self.singular == self.collinear
    }
}

/// Forms `E = Σ P(x_i)` and decides its singularity both spectrally and by the
/// collinearity of the inputs.
pub fn projection_sum_singularity(
    vectors: &[Vec<f64>],
    policy: TolPolicy,
) -> Result<ProjectionSumReport> {
    let (d, units) = unit_directions(vectors)?;
    let mut sum = Matrix::zeros(d, d);
    for u in &units {
        sum.add_block(0, 0, &projection_unchecked(u), 1.0);
    }
    let spectrum = sym_eigenvalues(&sum)?;
    let threshold = policy.threshold(d, spectrum.spectral_radius());
    let min_eigenvalue = spectrum.min();
    Ok(ProjectionSumReport {
        min_eigenvalue,
        threshold,
        singular: min_eigenvalue <= threshold,
        collinear: all_parallel(&units),
        sum,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ComplementSpectrum {
    pub m: usize,
    pub d: usize,
    pub spectrum: SpectrumReport,
    /// Eigenvalues within [`SPECTRUM_TOLERANCE`] of 0.
    pub zeros: usize,
    /// Eigenvalues within [`SPECTRUM_TOLERANCE`] of 1.
    pub ones: usize,
    /// Largest distance of any eigenvalue from `{0, 1}`.
    pub max_deviation: f64,
    /// `‖H N‖_max / max(1, ‖N‖_max)` for the explicit null basis `N`.
    pub null_basis_residual: f64,
    #[serde(skip)]
    pub h: Matrix,
}

impl ComplementSpectrum {
    pub fn expected_zeros(&self) -> usize {
        self.m + self.d
    }

    pub fn expected_ones(&self) -> usize {
        self.d * self.m - self.m - self.d
    }

    pub fn holds(&self) -> bool {
        self.zeros == self.expected_zeros()
            && self.ones == self.expected_ones()
            && self.max_deviation <= SPECTRUM_TOLERANCE
            && self.null_basis_residual <= NULL_BASIS_TOLERANCE
    }
}

/// Builds `H = D − F E⁻¹ Fᵀ` with `D = blkdiag(P_1..P_m)`, `F = [P_1; …; P_m]`,
/// `E = Σ P_i` and checks that its spectrum is `{0 (×(m+d)), 1 (×(dm−m−d))}`,
/// and that `H N = 0` for
///
/// ```text
/// N = [ x_1  0  …  0   P_1 ]
///     [ 0   x_2 …  0   P_2 ]
///     [ …               …  ]
///     [ 0    0  … x_m  P_m ]   (dm × (m+d))
/// ```
pub fn projection_complement_spectrum(vectors: &[Vec<f64>]) -> Result<ComplementSpectrum> {
    let (d, units) = unit_directions(vectors)?;
    if all_parallel(&units) {
        return Err(Error::invalid(
            "all vectors are collinear; the projection sum is singular",
        ));
    }
    let m = units.len();
    let dm = d * m;
    let projections: Vec<Matrix> = units.iter().map(|u| projection_unchecked(u)).collect();

    let mut dblk = Matrix::zeros(dm, dm);
    let mut f = Matrix::zeros(dm, d);
    let mut e = Matrix::zeros(d, d);
    for (i, p) in projections.iter().enumerate() {
        dblk.set_block(i * d, i * d, p);
        f.set_block(i * d, 0, p);
        e.add_block(0, 0, p, 1.0);
    }
    let e_inv = e.inverse()?;
    let h = &dblk - &(&(&f * &e_inv) * &f.transpose());
    // symmetric in exact arithmetic; drop the round-off asymmetry
    let h = (&h + &h.transpose()).scale(0.5);

    let spectrum = sym_eigen(&h)?;
    let mut zeros = 0;
    let mut ones = 0;
    let mut max_deviation = 0.0_f64;
    for &lambda in &spectrum.eigenvalues {
        let dev = lambda.abs().min((lambda - 1.0).abs());
        max_deviation = max_deviation.max(dev);
        if lambda.abs() <= SPECTRUM_TOLERANCE {
            zeros += 1;
        } else if (lambda - 1.0).abs() <= SPECTRUM_TOLERANCE {
            ones += 1;
        }
    }

    let mut basis = Matrix::zeros(dm, m + d);
    for (i, x) in vectors.iter().enumerate() {
        for (r, &xr) in x.iter().enumerate() {
            basis[(i * d + r, i)] = xr;
        }
        basis.set_block(i * d, m, &projections[i]);
    }
    let null_basis_residual = (&h * &basis).max_abs() / basis.max_abs().max(1.0);

    Ok(ComplementSpectrum {
        m,
        d,
        spectrum,
        zeros,
        ones,
        max_deviation,
        null_basis_residual,
        h,
    })
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct MonotonicityReport {
    pub rank_a: usize,
    pub rank_b: usize,
    pub rank_sum: usize,
}

impl MonotonicityReport {
    /// `rank(A + B) ≥ max(rank A, rank B)`.
    pub fn holds(&self) -> bool {
        self.rank_sum >= self.rank_a.max(self.rank_b)
    }
}

/// Compares the numerical rank of `A + B` with the ranks of two PSD matrices.
pub fn rank_monotonicity(a: &Matrix, b: &Matrix, policy: TolPolicy) -> Result<MonotonicityReport> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::invalid(format!(
            "dimension mismatch: {}x{} vs {}x{}",
            a.rows(),
            a.cols(),
            b.rows(),
            b.cols()
        )));
    }
    Ok(MonotonicityReport {
        rank_a: numerical_rank(a, policy)?.rank,
        rank_b: numerical_rank(b, policy)?.rank,
        rank_sum: numerical_rank(&(a + b), policy)?.rank,
    })
}
