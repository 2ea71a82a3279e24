use std::path::{Path, PathBuf};

use serde::Deserialize;

use crate::error::{Error, Result};

pub const CONFIG_ENV: &str = "ROSSBY_RESONANCE_CONFIG";

/// Defaults read from the TOML file named by `ROSSBY_RESONANCE_CONFIG`.
/// Command-line flags override every key.
///
/// ```toml
/// jobs = 4
/// format = "json"
/// cache = "/tmp/lambda-cache.jsonl"
/// bins = 32
/// seed = 7
/// ```
#[derive(Debug, Clone, Default, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub jobs: Option<usize>,
    pub format: Option<OutputFormat>,
    pub cache: Option<PathBuf>,
    pub bins: Option<usize>,
    pub seed: Option<u64>,
    pub max_norm: Option<i64>,
    pub samples: Option<u64>,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        toml::from_str(&text).map_err(|e| Error::Format(format!("config {}: {e}", path.display())))
    }

    /// The file named by the environment variable, or all defaults.
    pub fn from_env() -> Result<Self> {
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Self::load(Path::new(&p)),
            _ => Ok(Self::default()),
        }
    }
}

/// Fully resolved settings shared by all subcommands.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub jobs: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

impl RunConfig {
    pub fn resolve(
        jobs: Option<usize>,
        format: Option<OutputFormat>,
        out: Option<PathBuf>,
        file: &FileConfig,
    ) -> Result<Self> {
        let jobs = jobs.or(file.jobs).unwrap_or(1);
        if jobs == 0 {
            return Err(Error::InvalidArgument("jobs must be >= 1".into()));
        }
        Ok(Self {
            jobs,
            format: format.or(file.format).unwrap_or_default(),
            out,
        })
    }
}
