use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::{is_bearing_rigid, Configuration, Network};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::linalg::TolPolicy;

/// Sampled configurations with two points closer than this are redrawn.
pub const MIN_SAMPLE_SEPARATION: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenericOutcome {
    /// A rigid configuration was exhibited; this is a certificate.
    GenericallyRigid,
    /// Sampled evidence only: no tested configuration was rigid.
    NoRigidSampleFound,
}

#[derive(Debug, Clone, Serialize)]
pub struct GenericVerdict {
    pub samples_tested: usize,
    pub samples_rigid: usize,
    pub verdict: GenericOutcome,
    pub seed: u64,
    pub dim: usize,
    /// Index of the first rigid sample, if any.
    pub first_rigid_sample: Option<usize>,
}

impl GenericVerdict {
    pub fn is_generically_rigid(&self) -> bool {
        self.verdict == GenericOutcome::GenericallyRigid
    }
}

/// Draws `n` points with coordinates i.i.d. uniform on `[0, 1)`, redrawing the
/// whole configuration while two points are closer than [`MIN_SAMPLE_SEPARATION`].
pub fn random_configuration<R: Rng>(rng: &mut R, n: usize, d: usize) -> Result<Configuration> {
    if d < 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    if n < 2 {
        return Err(Error::invalid("a configuration needs at least two points"));
    }
    loop {
        let coords: Vec<f64> = (0..n * d).map(|_| rng.random::<f64>()).collect();
        let config = match Configuration::from_flat(d, coords) {
            Ok(c) => c,
            Err(Error::DegenerateConfiguration { .. }) => continue,
            Err(e) => return Err(e),
        };
        if config.min_pairwise_distance() >= MIN_SAMPLE_SEPARATION {
            return Ok(config);
        }
    }
}

/// Tests whether `graph` admits a bearing rigid configuration in `R^d` by
/// sampling up to `samples` random configurations; stops at the first rigid one.
pub fn test_generic_rigidity(
    graph: &Graph,
    d: usize,
    samples: usize,
    seed: u64,
    policy: TolPolicy,
) -> Result<GenericVerdict> {
    if d < 2 {
        return Err(Error::UnsupportedDimension(d));
    }
    if samples == 0 {
        return Err(Error::invalid("need at least one sample"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut tested = 0;
    let mut first = None;
    for s in 0..samples {
        let config = random_configuration(&mut rng, graph.n(), d)?;
        let net = Network::new(graph.clone(), config)?;
        tested += 1;
        if is_bearing_rigid(&net, policy)?.rigid {
            first = Some(s);
            break;
        }
    }
    Ok(GenericVerdict {
        samples_tested: tested,
        samples_rigid: usize::from(first.is_some()),
        verdict: if first.is_some() {
            GenericOutcome::GenericallyRigid
        } else {
            GenericOutcome::NoRigidSampleFound
        },
        seed,
        dim: d,
        first_rigid_sample: first,
    })
}
