use std::fmt;

use serde::{Deserialize, Serialize};

use super::{sym_eigenvalues, Matrix};
use crate::error::{Error, Result};

/// How the eigenvalue cut-off for numerical rank is chosen.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TolPolicy {
    /// `τ = factor · dim · ε · λ_max` where `λ_max` is the largest eigenvalue magnitude.
    Relative { factor: f64 },
    /// Fixed threshold.
    Absolute { threshold: f64 },
}

impl Default for TolPolicy {
    fn default() -> Self {
        TolPolicy::Relative { factor: 100.0 }
    }
}

impl TolPolicy {
    pub fn absolute(threshold: f64) -> Self {
        TolPolicy::Absolute { threshold }
    }

    /// Threshold for a spectrum of size `dim` whose largest magnitude is `lambda_max`.
    pub fn threshold(&self, dim: usize, lambda_max: f64) -> f64 {
        match *self {
            TolPolicy::Relative { factor } => factor * dim as f64 * f64::EPSILON * lambda_max.abs(),
            TolPolicy::Absolute { threshold } => threshold,
        }
    }
}

impl fmt::Display for TolPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TolPolicy::Relative { factor } => write!(f, "relative({factor}·dim·eps·λmax)"),
            TolPolicy::Absolute { threshold } => write!(f, "absolute({threshold:e})"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RankInfo {
    pub rank: usize,
    pub threshold: f64,
    /// Ascending spectrum the rank was read from.
    pub eigenvalues: Vec<f64>,
}

/// Rank of a sorted PSD spectrum under `policy`.
///
/// Fails with [`Error::NotPsd`] when an eigenvalue lies below `-τ`.
pub fn rank_of_spectrum(eigenvalues: &[f64], policy: TolPolicy) -> Result<(usize, f64)> {
    let lambda_max = eigenvalues.iter().fold(0.0_f64, |m, x| m.max(x.abs()));
    let tau = policy.threshold(eigenvalues.len(), lambda_max);
    if let Some(&lo) = eigenvalues.iter().find(|&&x| x < -tau) {
        return Err(Error::NotPsd {
            eigenvalue: lo,
            threshold: tau,
        });
    }
    Ok((eigenvalues.iter().filter(|&&x| x > tau).count(), tau))
}

/// Numerical rank of a symmetric positive semi-definite matrix: the number of
/// eigenvalues strictly above the policy threshold.
pub fn numerical_rank(a: &Matrix, policy: TolPolicy) -> Result<RankInfo> {
    let spectrum = sym_eigenvalues(a)?;
    let (rank, threshold) = rank_of_spectrum(&spectrum.eigenvalues, policy)?;
    Ok(RankInfo {
        rank,
        threshold,
        eigenvalues: spectrum.eigenvalues,
    })
}
