use super::{assemble_laplacian, Network};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::{dot, numerical_rank, TolPolicy};

/// Three points are collinear when the triangle they span has area below
/// `COLLINEAR_AREA_TOLERANCE · scale²`, `scale` being their largest pairwise distance.
pub const COLLINEAR_AREA_TOLERANCE: f64 = 1e-9;

/// Whether `a`, `b`, `c` are collinear under [`COLLINEAR_AREA_TOLERANCE`].
pub fn is_collinear_triple(a: &[f64], b: &[f64], c: &[f64]) -> bool {
    let u: Vec<f64> = b.iter().zip(a).map(|(x, y)| x - y).collect();
    let w: Vec<f64> = c.iter().zip(a).map(|(x, y)| x - y).collect();
    let uu = dot(&u, &u);
    let ww = dot(&w, &w);
    let uw = dot(&u, &w);
    // Lagrange identity: ‖u‖²‖w‖² − (u·w)² = ‖u ∧ w‖²
    let area = 0.5 * (uu * ww - uw * uw).max(0.0).sqrt();
    let bc: f64 = b.iter().zip(c).map(|(x, y)| (x - y) * (x - y)).sum();
    let scale2 = uu.max(ww).max(bc);
    area < COLLINEAR_AREA_TOLERANCE * scale2
}

/// The two networks compared when an edge splitting is reduced to a vertex addition.
///
/// Both place the new vertex `v = n` at the midpoint of `p_i` and `p_j`.
#[derive(Debug, Clone)]
pub struct EdgeSplitPair {
    /// Edge `(i, j)` replaced by `(v, i)`, `(v, j)`, `(v, k)`.
    pub split: Network,
    /// Edge `(i, j)` kept, plus `(v, i)` and `(v, k)`.
    pub shortcut: Network,
}

impl EdgeSplitPair {
    /// Numerical ranks of the two bearing Laplacians `(split, shortcut)`.
    pub fn ranks(&self, policy: TolPolicy) -> Result<(usize, usize)> {
        let a = numerical_rank(&assemble_laplacian(&self.split)?.matrix, policy)?;
        let b = numerical_rank(&assemble_laplacian(&self.shortcut)?.matrix, policy)?;
        Ok((a.rank, b.rank))
    }
}

/// Builds the edge-split network and its shortcut twin for edge `(i, j)` and anchor `k`.
pub fn edge_split_equiv_pair(net: &Network, i: usize, j: usize, k: usize) -> Result<EdgeSplitPair> {
    let n = net.n();
    if i >= n || j >= n || k >= n || i == j || j == k || i == k {
        return Err(Error::invalid(format!(
            "need three distinct existing vertices, got ({i}, {j}, {k})"
        )));
    }
    if !net.graph.has_edge(i, j) {
        return Err(Error::invalid(format!("edge ({i}, {j}) is not present")));
    }
    let (pi, pj, pk) = (
        net.config.point(i),
        net.config.point(j),
        net.config.point(k),
    );
    if is_collinear_triple(pi, pj, pk) {
        return Err(Error::invalid(format!(
            "points {i}, {j}, {k} are collinear"
        )));
    }

    let mid: Vec<f64> = pi.iter().zip(pj).map(|(a, b)| 0.5 * (a + b)).collect();
    let config = net.config.with_point(&mid)?;
    let v = n;

    let mut split = Graph::new(n + 1);
    let mut shortcut = Graph::new(n + 1);
    for (a, b) in net.graph.edges() {
        shortcut.add_edge(a, b)?;
        if (a, b) != (i.min(j), i.max(j)) {
            split.add_edge(a, b)?;
        }
    }
    for t in [i, j, k] {
        split.add_edge(v, t)?;
    }
    shortcut.add_edge(v, i)?;
    shortcut.add_edge(v, k)?;

    Ok(EdgeSplitPair {
        split: Network::new(split, config.clone())?,
        shortcut: Network::new(shortcut, config)?,
    })
}
