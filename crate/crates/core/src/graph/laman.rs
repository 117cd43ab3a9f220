use serde::{Deserialize, Serialize};

use super::pebble::PebbleGame;
use super::Graph;
use crate::error::{Error, Result};

/// Vertex cap for exhaustive subset enumeration.
pub const BRUTE_FORCE_MAX_VERTICES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum LamanMethod {
    SubsetEnumeration,
    PebbleGame,
}

/// Why a graph failed the Laman test.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// `|E| ≠ 2n − 3`.
    EdgeCount { expected: i64, found: usize },
    /// A vertex subset spanning more than `2k − 3` edges.
    DenseSubset {
        vertices: Vec<usize>,
        spanned: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LamanCertificate {
    pub verdict: bool,
    pub method: LamanMethod,
    pub witness: Option<Violation>,
}

impl LamanCertificate {
    /// Re-checks the witness directly against `g`.
    pub fn witness_holds(&self, g: &Graph) -> bool {
        match &self.witness {
            None => self.verdict,
            Some(Violation::EdgeCount { expected, found }) => {
                *found == g.edge_count()
                    && *expected == laman_edge_target(g.n())
                    && *expected != *found as i64
            }
            Some(Violation::DenseSubset { vertices, spanned }) => {
                let k = vertices.len();
                k >= 2
                    && g.spanned_edges(vertices) == *spanned
                    && *spanned as i64 > 2 * k as i64 - 3
            }
        }
    }
}

pub(crate) fn laman_edge_target(n: usize) -> i64 {
    2 * n as i64 - 3
}

fn edge_count_violation(g: &Graph) -> Option<Violation> {
    let expected = laman_edge_target(g.n());
    (g.edge_count() as i64 != expected).then_some(Violation::EdgeCount {
        expected,
        found: g.edge_count(),
    })
}

/// Laman test by enumerating every vertex subset. Exponential; `n ≤ 16`.
///
/// On a sparsity failure the witness is a smallest violating subset.
pub fn is_laman_bruteforce(g: &Graph) -> Result<LamanCertificate> {
    let n = g.n();
    if n > BRUTE_FORCE_MAX_VERTICES {
        return Err(Error::Capacity {
            n,
            max: BRUTE_FORCE_MAX_VERTICES,
        });
    }
    let method = LamanMethod::SubsetEnumeration;
    if let Some(v) = edge_count_violation(g) {
        return Ok(LamanCertificate {
            verdict: false,
            method,
            witness: Some(v),
        });
    }

    let mut adj = vec![0u32; n];
    for (i, j) in g.edges() {
        adj[i] |= 1 << j;
        adj[j] |= 1 << i;
    }
    let mut worst: Option<(u32, usize)> = None;
    for mask in 1u32..(1u32 << n) {
        let k = mask.count_ones() as i64;
        if k < 2 {
            continue;
        }
        if let Some((best, _)) = worst {
            if mask.count_ones() >= best.count_ones() {
                continue;
            }
        }
        let mut twice = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            twice += (adj[v] & mask).count_ones() as usize;
        }
        let spanned = twice / 2;
        if spanned as i64 > 2 * k - 3 {
            worst = Some((mask, spanned));
        }
    }

    Ok(match worst {
        None => LamanCertificate {
            verdict: true,
            method,
            witness: None,
        },
        Some((mask, spanned)) => LamanCertificate {
            verdict: false,
            method,
            witness: Some(Violation::DenseSubset {
                vertices: (0..n).filter(|&v| mask >> v & 1 == 1).collect(),
                spanned,
            }),
        },
    })
}

/// Laman test by the (2,3)-pebble game. Polynomial; no size cap.
pub fn is_laman_pebble(g: &Graph) -> LamanCertificate {
    let method = LamanMethod::PebbleGame;
    if let Some(v) = edge_count_violation(g) {
        return LamanCertificate {
            verdict: false,
            method,
            witness: Some(v),
        };
    }
    let mut game = PebbleGame::new(g.n());
    for (i, j) in g.edges() {
        if let Err(closure) = game.insert(i, j) {
            let spanned = g.spanned_edges(&closure);
            return LamanCertificate {
                verdict: false,
                method,
                witness: Some(Violation::DenseSubset {
                    vertices: closure,
                    spanned,
                }),
            };
        }
    }
    LamanCertificate {
        verdict: true,
        method,
        witness: None,
    }
}
