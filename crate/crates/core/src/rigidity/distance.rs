use super::Network;
use crate::error::{Error, Result};
use crate::linalg::{numerical_rank, Matrix, TolPolicy};

/// `|E| × dn` distance rigidity matrix: the row of edge `(i, j)` holds
/// `(p_i − p_j)ᵀ` in block `i` and `(p_j − p_i)ᵀ` in block `j`.
pub fn distance_rigidity_matrix(net: &Network) -> Matrix {
    let (d, n) = (net.dim(), net.n());
    let mut r = Matrix::zeros(net.graph.edge_count(), d * n);
    for (row, (i, j)) in net.graph.edges().enumerate() {
        let (pi, pj) = (net.config.point(i), net.config.point(j));
        for c in 0..d {
            r[(row, i * d + c)] = pi[c] - pj[c];
            r[(row, j * d + c)] = pj[c] - pi[c];
        }
    }
    r
}

/// Rank of the planar distance rigidity matrix, read from the spectrum of `RᵀR`
/// under `policy` (which then acts on squared singular values).
pub fn distance_rigidity_rank(net: &Network, policy: TolPolicy) -> Result<usize> {
    if net.dim() != 2 {
        return Err(Error::UnsupportedDimension(net.dim()));
    }
    let r = distance_rigidity_matrix(net);
    let gram = &r.transpose() * &r;
    Ok(numerical_rank(&gram, policy)?.rank)
}
