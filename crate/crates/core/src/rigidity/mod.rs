//! Bearing rigidity of networks.
//!
//! A [`Network`] is a [`Graph`] with its vertices placed at distinct points of
//! `R^d`. Its bearing Laplacian is the `dn × dn` matrix-weighted Laplacian whose
//! edge weights are the projections `I − g gᵀ` of the edge bearings; the network is
//! (infinitesimally) bearing rigid iff that matrix has rank `dn − d − 1`.

mod distance;
mod edge_split;
mod generic;
mod laplacian;
mod perturb;
mod projection_checks;

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::norm;

pub use distance::{distance_rigidity_matrix, distance_rigidity_rank};
pub use edge_split::{
    edge_split_equiv_pair, is_collinear_triple, EdgeSplitPair, COLLINEAR_AREA_TOLERANCE,
};
pub use generic::{
    random_configuration, test_generic_rigidity, GenericOutcome, GenericVerdict,
    MIN_SAMPLE_SEPARATION,
};
pub use laplacian::{assemble_laplacian, is_bearing_rigid, BearingLaplacian, RigidityReport};
pub use perturb::{perturb_to_rigid, Perturbation, DEFAULT_MAX_ATTEMPTS};
pub use projection_checks::{
    projection_complement_spectrum, projection_sum_singularity, rank_monotonicity,
    ComplementSpectrum, MonotonicityReport, ProjectionSumReport, NULL_BASIS_TOLERANCE,
    SPECTRUM_TOLERANCE,
};

/// Points closer than this are treated as coincident.
pub const DISTINCT_POINT_TOLERANCE: f64 = 1e-9;

/// `n ≥ 2` pairwise-distinct points in `R^d`, `d ≥ 2`, stored as the stacked
/// vector `p = [p_1ᵀ, …, p_nᵀ]ᵀ`.
#[derive(Debug, Clone, PartialEq)]
pub struct Configuration {
    d: usize,
    coords: Vec<f64>,
}

impl Configuration {
    pub fn new(d: usize, points: &[Vec<f64>]) -> Result<Self> {
        if let Some((i, p)) = points.iter().enumerate().find(|(_, p)| p.len() != d) {
            return Err(Error::invalid(format!(
                "point {i} has {} coordinates, expected {d}",
                p.len()
            )));
        }
        Self::from_flat(d, points.concat())
    }

    pub fn from_flat(d: usize, coords: Vec<f64>) -> Result<Self> {
        if d < 2 {
            return Err(Error::UnsupportedDimension(d));
        }
        if !coords.len().is_multiple_of(d) {
            return Err(Error::invalid(format!(
                "{} coordinates do not split into points of dimension {d}",
                coords.len()
            )));
        }
        if coords.len() / d < 2 {
            return Err(Error::invalid("a configuration needs at least two points"));
        }
        if coords.iter().any(|x| !x.is_finite()) {
            return Err(Error::invalid("non-finite coordinate"));
        }
        let config = Configuration { d, coords };
        config.check_distinct()?;
        Ok(config)
    }

    fn check_distinct(&self) -> Result<()> {
        let n = self.n();
        for i in 0..n {
            for j in (i + 1)..n {
                if self.distance(i, j) <= DISTINCT_POINT_TOLERANCE {
                    return Err(Error::DegenerateConfiguration { i, j });
                }
            }
        }
        Ok(())
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.coords.len() / self.d
    }

    pub fn point(&self, i: usize) -> &[f64] {
        &self.coords[i * self.d..(i + 1) * self.d]
    }

    pub fn points(&self) -> impl Iterator<Item = &[f64]> {
        self.coords.chunks_exact(self.d)
    }

    /// The stacked vector `p ∈ R^{dn}`.
    pub fn as_flat(&self) -> &[f64] {
        &self.coords
    }

    pub fn distance(&self, i: usize, j: usize) -> f64 {
        self.point(i)
            .iter()
            .zip(self.point(j))
            .map(|(a, b)| (a - b) * (a - b))
            .sum::<f64>()
            .sqrt()
    }

    pub fn min_pairwise_distance(&self) -> f64 {
        let n = self.n();
        let mut best = f64::INFINITY;
        for i in 0..n {
            for j in (i + 1)..n {
                best = best.min(self.distance(i, j));
            }
        }
        best
    }

    /// Euclidean distance `‖p − q‖` between stacked vectors.
    pub fn displacement(&self, other: &Configuration) -> f64 {
        let diff: Vec<f64> = self
            .coords
            .iter()
            .zip(&other.coords)
            .map(|(a, b)| a - b)
            .collect();
        norm(&diff)
    }

    /// Appends a point, re-checking distinctness.
    pub fn with_point(&self, p: &[f64]) -> Result<Self> {
        if p.len() != self.d {
            return Err(Error::invalid("point dimension mismatch"));
        }
        let mut coords = self.coords.clone();
        coords.extend_from_slice(p);
        Self::from_flat(self.d, coords)
    }

    /// Applies `f` to every point.
    pub fn map_points(&self, mut f: impl FnMut(&[f64]) -> Vec<f64>) -> Result<Self> {
        let coords: Vec<f64> = self.points().flat_map(&mut f).collect();
        Self::from_flat(self.d, coords)
    }
}

/// A graph together with a configuration of matching size.
#[derive(Debug, Clone, PartialEq)]
pub struct Network {
    pub graph: Graph,
    pub config: Configuration,
}

impl Network {
    pub fn new(graph: Graph, config: Configuration) -> Result<Self> {
        if graph.n() != config.n() {
            return Err(Error::invalid(format!(
                "graph has {} vertices but configuration has {} points",
                graph.n(),
                config.n()
            )));
        }
        Ok(Network { graph, config })
    }

    pub fn dim(&self) -> usize {
        self.config.dim()
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    /// `dn − d − 1`, the rank of a bearing rigid network's Laplacian.
    pub fn target_rank(&self) -> usize {
        let d = self.dim();
        d * self.n() - d - 1
    }

    pub fn with_config(&self, config: Configuration) -> Result<Self> {
        Network::new(self.graph.clone(), config)
    }
}

/// Unit bearing `g_ij = (p_j − p_i)/‖p_j − p_i‖`.
pub fn bearing(config: &Configuration, i: usize, j: usize) -> Result<Vec<f64>> {
    let diff: Vec<f64> = config
        .point(j)
        .iter()
        .zip(config.point(i))
        .map(|(a, b)| a - b)
        .collect();
    let len = norm(&diff);
    if len <= DISTINCT_POINT_TOLERANCE {
        return Err(Error::DegenerateConfiguration { i, j });
    }
    Ok(diff.into_iter().map(|x| x / len).collect())
}

/// Bearings of every edge in both directions, keyed by `(from, to)`.
pub fn bearings(net: &Network) -> Result<BTreeMap<(usize, usize), Vec<f64>>> {
    let mut out = BTreeMap::new();
    for (i, j) in net.graph.edges() {
        let g = bearing(&net.config, i, j)?;
        out.insert((j, i), g.iter().map(|x| -x).collect());
        out.insert((i, j), g);
    }
    Ok(out)
}
