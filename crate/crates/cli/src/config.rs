use std::path::{Path, PathBuf};

use serde::Deserialize;

pub const DEFAULT_BITS: usize = 256;
pub const BITS_ENV: &str = "SPECTRA_BITS";

/// Optional `key = value` overrides read from `--config`.
#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub bits: Option<usize>,
    pub threads: Option<usize>,
    /// Cap on enumerated words and search nodes.
    pub max_words: Option<u64>,
    /// Cap on enumerated periodic orbits.
    pub max_orbits: Option<u64>,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

/// Settings shared by every subcommand, after merging flags, the config
/// file, the environment and the defaults, in that order of priority.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub bits: usize,
    pub threads: Option<usize>,
    pub max_words: u128,
    pub max_orbits: u128,
    pub out: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        toml::from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
    }
}

pub struct Overrides {
    pub bits: Option<usize>,
    pub threads: Option<usize>,
    pub max_words: Option<u128>,
    pub max_orbits: Option<u128>,
}

impl RunConfig {
    pub fn resolve(flags: Overrides, file: FileConfig, env_bits: Option<String>) -> Result<Self, String> {
        let env_bits = match env_bits {
            Some(s) => Some(
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| format!("{BITS_ENV}={s:?} is not a bit count"))?,
            ),
            None => None,
        };
        let cfg = RunConfig {
            bits: flags.bits.or(file.bits).or(env_bits).unwrap_or(DEFAULT_BITS),
            threads: flags.threads.or(file.threads),
            max_words: flags
                .max_words
                .or(file.max_words.map(u128::from))
                .unwrap_or(spectra_core::cantor::DEFAULT_BUDGET),
            max_orbits: flags
                .max_orbits
                .or(file.max_orbits.map(u128::from))
                .unwrap_or(spectra_core::cantor::DEFAULT_BUDGET),
            out: file.out,
            svg: file.svg,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<(), String> {
        if self.bits < 64 {
            return Err(format!("precision must be at least 64 bits, got {}", self.bits));
        }
        if self.max_words == 0 || self.max_orbits == 0 {
            return Err("budgets must be positive".into());
        }
        if self.threads == Some(0) {
            return Err("--threads must be positive".into());
        }
        Ok(())
    }
}
