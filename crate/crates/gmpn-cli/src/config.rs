//! Execution configuration: caps, parallelism, memo strategy.
//!
//! Loaded from a `key = value` file (one pair per line, `#` comments), with
//! command-line flags overriding file values. The defaults are safe for a
//! laptop.

use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};

/// How scans hold the v_max memo table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MemoStrategy {
    /// One solver per worker, reused across the elements it processes.
    Shared,
    /// A fresh solver per element.
    Fresh,
}

impl MemoStrategy {
    pub fn as_str(self) -> &'static str {
        match self {
            MemoStrategy::Shared => "shared",
            MemoStrategy::Fresh => "fresh",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    /// Largest group order that exhaustive operations will enumerate.
    pub enumeration_cap: u128,
    /// Largest cycle count for exhaustive null-partition streams.
    pub partition_cap: usize,
    /// Largest interval for which Hasse edges are computed.
    pub hasse_cap: usize,
    /// Largest carrier for which the lattice check runs.
    pub lattice_cap: usize,
    /// Worker count for scans; 0 means the rayon default.
    pub parallel: usize,
    pub memo: MemoStrategy,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            enumeration_cap: gmpn::enumerate::DEFAULT_ENUMERATION_CAP,
            partition_cap: gmpn::partitions::DEFAULT_PARTITION_CAP,
            hasse_cap: 2000,
            lattice_cap: 2000,
            parallel: 0,
            memo: MemoStrategy::Shared,
        }
    }
}

impl Config {
    pub fn load(path: Option<&Path>) -> Result<Config> {
        let mut config = Config::default();
        let Some(path) = path else {
            return Ok(config);
        };
        let text = fs::read_to_string(path)
            .with_context(|| format!("cannot read config file {}", path.display()))?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("{}:{}: expected `key = value`", path.display(), lineno + 1);
            };
            let (key, value) = (key.trim(), value.trim());
            let context = || format!("{}:{}: bad value for {key}", path.display(), lineno + 1);
            match key {
                "enumeration_cap" => {
                    config.enumeration_cap = value.parse().with_context(context)?
                }
                "partition_cap" => config.partition_cap = value.parse().with_context(context)?,
                "hasse_cap" => config.hasse_cap = value.parse().with_context(context)?,
                "lattice_cap" => config.lattice_cap = value.parse().with_context(context)?,
                "parallel" => config.parallel = value.parse().with_context(context)?,
                "memo" => {
                    config.memo = match value {
                        "shared" => MemoStrategy::Shared,
                        "fresh" => MemoStrategy::Fresh,
                        _ => bail!(
                            "{}:{}: memo must be `shared` or `fresh`",
                            path.display(),
                            lineno + 1
                        ),
                    }
                }
                _ => bail!(
                    "{}:{}: unknown config key `{key}`",
                    path.display(),
                    lineno + 1
                ),
            }
        }
        Ok(config)
    }
}
