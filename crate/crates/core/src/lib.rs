//! Bearing rigidity of networks in arbitrary dimension.
//!
//! The crate is split in three layers:
//!
//! - [`linalg`]: a small dense kernel (row-major [`Matrix`], orthogonal projections,
//!   cyclic Jacobi eigensolver, tolerance-based numerical rank).
//! - [`graph`]: undirected simple graphs, Laman verification (subset enumeration and
//!   the (2,3)-pebble game), Henneberg construction and Laman spanning subgraph extraction.
//! - [`rigidity`]: bearing Laplacians, rigidity verdicts, generic-rigidity sampling,
//!   perturbation repair, the edge-splitting equivalence pair, numerical checks of the
//!   projection-matrix identities behind the construction, and the planar distance-rigidity cross-check.
//!
//! [`io`] holds the JSON and DOT formats used by the command-line tool and
//! [`repro`] rebuilds the worked examples (path/triangle, the 8-vertex construction,
//! the 4-cycle counterexample).

pub mod error;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod repro;
pub mod rigidity;

pub use error::{Error, Result};
pub use graph::{
    extract_laman_spanning, henneberg_apply, henneberg_generate, is_laman_bruteforce,
    is_laman_pebble, Graph, HennebergStep, HennebergTrace, LamanCertificate, LamanMethod,
    Violation,
};
pub use linalg::{
    numerical_rank, projection, sym_eigen, Matrix, RankInfo, SpectrumReport, TolPolicy,
};
pub use rigidity::{
    assemble_laplacian, bearings, distance_rigidity_rank, edge_split_equiv_pair, is_bearing_rigid,
    perturb_to_rigid, projection_complement_spectrum, projection_sum_singularity,
    rank_monotonicity, test_generic_rigidity, BearingLaplacian, Configuration, GenericOutcome,
    GenericVerdict, Network, RigidityReport,
};
