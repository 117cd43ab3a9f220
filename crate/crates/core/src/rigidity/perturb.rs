use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{is_bearing_rigid, random_configuration, Configuration, Network};
use crate::error::{Error, Result};
use crate::linalg::TolPolicy;

pub const DEFAULT_MAX_ATTEMPTS: usize = 40;
/// Halvings of `α` before a fresh anchor configuration is drawn.
const HALVINGS_PER_ANCHOR: usize = 10;

#[derive(Debug, Clone)]
pub struct Perturbation {
    pub network: Network,
    /// `‖p′ − p_0‖`.
    pub displacement: f64,
    /// Interpolation weight that produced the result (`0` for an unchanged input).
    pub alpha: f64,
    /// Rigidity evaluations spent, not counting the initial check of the input.
    pub attempts: usize,
}

/// Moves `net` to a bearing rigid configuration within distance `epsilon`.
///
/// Searches along the segment `p_α = (1 − α) p_0 + α p_1` towards a random
/// rigid anchor `p_1`, starting at `α = min(1, ε/‖p_1 − p_0‖)` and halving. A new
/// anchor is drawn every ten halvings. Each rigidity evaluation (anchor checks
/// included) counts against `max_attempts`.
pub fn perturb_to_rigid(
    net: &Network,
    epsilon: f64,
    seed: u64,
    max_attempts: usize,
    policy: TolPolicy,
) -> Result<Perturbation> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(Error::invalid(format!(
            "epsilon must be positive, got {epsilon}"
        )));
    }
    if is_bearing_rigid(net, policy)?.rigid {
        return Ok(Perturbation {
            network: net.clone(),
            displacement: 0.0,
            alpha: 0.0,
            attempts: 0,
        });
    }

    let (n, d) = (net.n(), net.dim());
    let p0 = net.config.as_flat();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;

    while attempts < max_attempts {
        let anchor = random_configuration(&mut rng, n, d)?;
        attempts += 1;
        if !is_bearing_rigid(&net.with_config(anchor.clone())?, policy)?.rigid {
            continue;
        }
        let p1 = anchor.as_flat();
        let gap = anchor.displacement(&net.config);
        let mut alpha = (epsilon / gap).min(1.0);

        for _ in 0..HALVINGS_PER_ANCHOR {
            if attempts >= max_attempts {
                break;
            }
            attempts += 1;
            let coords: Vec<f64> = p0
                .iter()
                .zip(p1)
                .map(|(a, b)| (1.0 - alpha) * a + alpha * b)
                .collect();
            let candidate = Configuration::from_flat(d, coords);
            if let Ok(config) = candidate {
                let displacement = config.displacement(&net.config);
                if displacement < epsilon {
                    let moved = net.with_config(config)?;
                    if is_bearing_rigid(&moved, policy)?.rigid {
                        return Ok(Perturbation {
                            network: moved,
                            displacement,
                            alpha,
                            attempts,
                        });
                    }
                }
            }
            alpha *= 0.5;
        }
    }
    Err(Error::NotFound { attempts })
}
