use serde::Serialize;

use super::{bearing, Network};
use crate::error::Result;
use crate::linalg::{numerical_rank, projection_unchecked, Matrix, TolPolicy};

/// `dn × dn` bearing Laplacian: block `(i, j)` is `−P(g_ij)` for edges and block
/// `(i, i)` is the sum of the projections of the edges at `i`.
#[derive(Debug, Clone)]
pub struct BearingLaplacian {
    pub matrix: Matrix,
    pub d: usize,
    pub n: usize,
}

impl BearingLaplacian {
    pub fn target_rank(&self) -> usize {
        self.d * self.n - self.d - 1
    }

    /// `max` entry of `L (1_n ⊗ I_d)`.
    pub fn translation_residual(&self) -> f64 {
        let (d, n) = (self.d, self.n);
        let mut worst = 0.0_f64;
        for axis in 0..d {
            let mut ones = vec![0.0; d * n];
            for i in 0..n {
                ones[i * d + axis] = 1.0;
            }
            worst = self
                .matrix
                .mul_vec(&ones)
                .iter()
                .fold(worst, |m, x| m.max(x.abs()));
        }
        worst
    }

    /// `max` entry of `L p`.
    pub fn scaling_residual(&self, p: &[f64]) -> f64 {
        self.matrix
            .mul_vec(p)
            .iter()
            .fold(0.0, |m, x: &f64| m.max(x.abs()))
    }
}

/// Assembles the bearing Laplacian of `net`.
pub fn assemble_laplacian(net: &Network) -> Result<BearingLaplacian> {
    let (d, n) = (net.dim(), net.n());
    let mut l = Matrix::zeros(d * n, d * n);
    for (i, j) in net.graph.edges() {
        let g = bearing(&net.config, i, j)?;
        let p = projection_unchecked(&g);
        l.add_block(i * d, i * d, &p, 1.0);
        l.add_block(j * d, j * d, &p, 1.0);
        l.add_block(i * d, j * d, &p, -1.0);
        l.add_block(j * d, i * d, &p, -1.0);
    }
    Ok(BearingLaplacian { matrix: l, d, n })
}

#[derive(Debug, Clone, Serialize)]
pub struct RigidityReport {
    pub rank: usize,
    pub target_rank: usize,
    /// The `d + 2` smallest eigenvalues: `d + 1` trivial zeros plus the first
    /// one that decides the verdict.
    pub smallest_eigenvalues: Vec<f64>,
    pub threshold_used: f64,
    pub tolerance: TolPolicy,
    pub rigid: bool,
}

/// Bearing rigidity verdict: rigid iff the numerical rank of the bearing
/// Laplacian equals `dn − d − 1`.
pub fn is_bearing_rigid(net: &Network, policy: TolPolicy) -> Result<RigidityReport> {
    let lap = assemble_laplacian(net)?;
    let info = numerical_rank(&lap.matrix, policy)?;
    let target_rank = lap.target_rank();
    let keep = (lap.d + 2).min(info.eigenvalues.len());
    Ok(RigidityReport {
        rank: info.rank,
        target_rank,
        smallest_eigenvalues: info.eigenvalues[..keep].to_vec(),
        threshold_used: info.threshold,
        tolerance: policy,
        rigid: info.rank == target_rank,
    })
}
