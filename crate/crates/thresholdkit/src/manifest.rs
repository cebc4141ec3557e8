//! Per-run record of what was executed on which inputs.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunManifest {
    pub command: Vec<String>,
    /// Input path to hex SHA-256 of its contents.
    pub inputs: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub version: String,
    pub outcome: String,
    pub timestamp_unix: u64,
}

impl RunManifest {
    pub fn new(command: Vec<String>) -> Self {
        RunManifest {
            command,
            inputs: BTreeMap::new(),
            seed: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
            outcome: String::new(),
            timestamp_unix: 0,
        }
    }

    pub fn record_input(&mut self, path: &Path) -> Result<()> {
        let bytes = fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.inputs.insert(
            path.display().to_string(),
            hex::encode(Sha256::digest(&bytes)),
        );
        Ok(())
    }

    /// Stamps the current time; everything else depends only on the run.
    pub fn finish(&mut self, outcome: impl Into<String>) {
        self.outcome = outcome.into();
        self.timestamp_unix = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0);
    }

    /// Writes to `path`, or to stderr when no path is given.
    pub fn emit(&self, path: Option<&Path>) -> Result<()> {
        let text = serde_json::to_string(self)?;
        match path {
            Some(path) => {
                fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))
            }
            None => {
                eprintln!("{text}");
                Ok(())
            }
        }
    }
}
