use std::time::Duration;

use serde::Serialize;
use serde_json::Value;

use bearing_core::TolPolicy;

/// Provenance block embedded in every machine-readable output.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub command: String,
    pub arguments: Vec<String>,
    pub seed: Option<u64>,
    pub tolerance: TolPolicy,
    pub version: String,
    /// Left out of files so repeated runs stay byte-identical.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_seconds: Option<f64>,
}

impl RunManifest {
    pub fn new(command: &str, seed: Option<u64>, tolerance: TolPolicy) -> Self {
        RunManifest {
            command: command.to_string(),
            arguments: std::env::args().skip(1).collect(),
            seed,
            tolerance,
            version: env!("CARGO_PKG_VERSION").to_string(),
            wall_time_seconds: None,
        }
    }

    pub fn timed(&self, elapsed: Duration) -> Self {
        RunManifest {
            wall_time_seconds: Some(elapsed.as_secs_f64()),
            ..self.clone()
        }
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("manifest always serializes")
    }
}
